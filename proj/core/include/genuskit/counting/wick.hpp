#pragma once

#include <map>
#include <vector>

#include "genuskit/algebra/rational.hpp"

namespace genuskit {

// Brute force over all pairings of labeled half-edges: n[i] vertices of
// valence valences[i], half-edges cyclically ordered by label at each
// vertex, faces traced as cycles of (rotation after pairing). Returns
// genus -> number of connected gluings. At most 16 half-edges.
std::map<int, Integer> wick_oracle(const std::vector<int>& valences, const std::vector<int>& n);

}  // namespace genuskit
