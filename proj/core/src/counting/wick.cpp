#include "genuskit/counting/wick.hpp"

#include <numeric>

#include "genuskit/errors.hpp"

namespace genuskit {

namespace {

struct Enumerator {
  int half_edges = 0;
  int vertices = 0;
  std::vector<int> vertex_of;
  std::vector<int> next_at_vertex;  // cyclic rotation by label
  std::vector<int> partner;
  std::map<int, Integer> counts;

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void finish() {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    int components = vertices;
    for (int h = 0; h < half_edges; ++h) {
      const int a = find(parent, vertex_of[h]);
      const int b = find(parent, vertex_of[partner[h]]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components != 1) return;
    std::vector<bool> seen(half_edges, false);
    int faces = 0;
    for (int h = 0; h < half_edges; ++h) {
      if (seen[h]) continue;
      ++faces;
      for (int x = h; !seen[x]; x = next_at_vertex[partner[x]]) seen[x] = true;
    }
    const int euler = vertices - half_edges / 2 + faces;
    if (euler % 2 != 0 || euler > 2) throw InternalInconsistency("wick oracle: impossible Euler characteristic");
    counts[(2 - euler) / 2] += 1;
  }

  void pair_from(int first_free) {
    while (first_free < half_edges && partner[first_free] >= 0) ++first_free;
    if (first_free == half_edges) {
      finish();
      return;
    }
    for (int other = first_free + 1; other < half_edges; ++other) {
      if (partner[other] >= 0) continue;
      partner[first_free] = other;
      partner[other] = first_free;
      pair_from(first_free + 1);
      partner[first_free] = partner[other] = -1;
    }
  }
};

}  // namespace

std::map<int, Integer> wick_oracle(const std::vector<int>& valences, const std::vector<int>& n) {
  if (valences.size() != n.size()) throw DomainError("one vertex count per valence is required");
  Enumerator en;
  for (std::size_t i = 0; i < valences.size(); ++i) {
    if (valences[i] < 1 || n[i] < 0) throw DomainError("invalid valence or vertex count");
    for (int v = 0; v < n[i]; ++v) {
      const int start = en.half_edges;
      for (int h = 0; h < valences[i]; ++h) {
        en.vertex_of.push_back(en.vertices);
        en.next_at_vertex.push_back(start + (h + 1) % valences[i]);
      }
      en.half_edges += valences[i];
      ++en.vertices;
    }
  }
  if (en.half_edges > 16) throw DomainError("wick oracle is limited to 16 half-edges");
  if (en.half_edges % 2 != 0 || en.vertices == 0) return {};
  en.partner.assign(en.half_edges, -1);
  en.pair_from(0);
  return en.counts;
}

}  // namespace genuskit
