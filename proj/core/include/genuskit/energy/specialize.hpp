#pragma once

#include "genuskit/energy/closed_form.hpp"

namespace genuskit {

enum class ModelFamily { quartic, two_valence, sixtic };

struct ModelSpec {
  ModelFamily family = ModelFamily::quartic;
  int nu = 2;  // two_valence only: V = g2 lambda + g_{2 nu} lambda^nu

  std::string name() const;
};

// Symbolic W over {xi, couplings}: quartic {g2, g4}, two-valence
// {g2, g<2nu>}, sixtic {g2, g4, g6}.
WFunction model_W(const ModelSpec& spec);

// The printed per-family F^(k), k = 0..2, over model_ring(model_W(spec)).
// These hold only on the hodograph; compare with equal_on_hodograph.
ClosedFormF specialize_model(const ModelSpec& spec, int k);

}  // namespace genuskit
