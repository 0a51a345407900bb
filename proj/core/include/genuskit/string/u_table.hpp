#pragma once

#include <string>
#include <vector>

#include "genuskit/algebra/poly.hpp"

namespace genuskit {

// Coefficients U_{k,j} of U_k = U_0 sum_j U_{k,j} / (lambda - 4 r0)^j.
//
// The continuum table lives in a ring of jet symbols r_i^(m) (m-th
// T-derivative of r_i). The triple-scaling table is the same expansion
// around a constant base point rc, with jets u_i^(m) (i >= 1) in place of
// r_i^(m); its entries are the U^{[k,j]} of the critical analysis.
class UCoeffTable {
 public:
  int kmax() const { return kmax_; }
  bool triple_scaling() const { return triple_; }
  // Jet symbols plus "eta" (and "rc" for triple scaling).
  const RingPtr& ring() const { return ring_; }

  // Ring index of the m-th derivative of r_i (continuum) or u_i (triple
  // scaling, i >= 1). Throws TruncationError beyond the stored jets.
  std::size_t jet(int i, int m) const;
  int max_jet_order(int i) const;
  std::size_t eta() const { return eta_; }
  std::size_t rc() const;

  // Zero outside 1 <= j <= 3k.
  const Poly& entry(int k, int j) const;
  // Weight of a monomial: i-th derivative of r_j weighs i + 2j, rc weighs 0.
  int weight(const Monomial& m) const;
  // Polynomial degree in the jet symbols (rc included).
  int jet_degree(const Monomial& m) const;

  // Name of a jet symbol in print form, e.g. "r0''" or "u1^(4)".
  static std::string jet_name(const std::string& base, int i, int m);

 private:
  friend UCoeffTable derive_u_table(int kmax);
  friend UCoeffTable derive_triple_scaling_table(int kmax);
  friend class UTableSolver;

  int kmax_ = 0;
  bool triple_ = false;
  RingPtr ring_;
  std::vector<std::vector<std::size_t>> jets_;  // jets_[i][m]
  std::size_t eta_ = 0;
  std::size_t rc_ = 0;
  std::vector<std::vector<Poly>> entries_;  // entries_[k][j]
  Poly zero_;
};

// Expands the quadratic resolvent identity order by order in epsilon, then
// re-checks the result against the quadratic identity at one order beyond
// kmax and against the linear (shifted) identity. Throws
// InternalInconsistency if any check fails. kmax <= 5.
UCoeffTable derive_u_table(int kmax);
// kmax <= 6.
UCoeffTable derive_triple_scaling_table(int kmax);

}  // namespace genuskit
