#pragma once

#include <memory>

#include "rumin/poly_form.hpp"
#include "rumin/rumin_fibers.hpp"

namespace rumin {

/// The Rumin complex of H_n with polynomial data: cached pointwise fibers,
/// the canonical quotient representatives, the middle-degree lift, and the
/// differentials. Immutable and safe to share.
class RuminComplex {
 public:
  explicit RuminComplex(int n);

  /// Shared, lazily constructed instance per rank.
  static const RuminComplex& get(int n);

  int n() const { return n_; }
  int N() const { return 2 * n_ + 1; }
  const GradedAlgebra& algebra() const { return g_; }
  const RuminFiber& fiber(int k) const;

  /// Canonical representative of a class mod I^k: the input with every I^k
  /// pivot monomial eliminated (supported on complement monomials only).
  PolyForm canonical_rep(int k, const PolyForm& w) const;

  bool in_J_pointwise(int k, const PolyForm& w) const;
  bool in_I_pointwise(int k, const PolyForm& w) const;

  /// The unique lift alpha + c with c = theta_{2n+1} ^ (horizontal form)
  /// such that d(lift) lies pointwise in the J^{n+1} fiber. The correction
  /// is solved from one exact linear system (the inverse Lefschetz matrix
  /// applied to coefficient polynomials); the system's homogeneous kernel is
  /// trivial, which construction verifies. d(lift) membership is re-checked
  /// on every call and raises InternalError on failure.
  PolyForm rumin_lift(const PolyForm& alpha, int degree_bound = -1) const;

  /// The Rumin differential on representatives:
  ///   k < n : d followed by reduction to the canonical complement,
  ///   k = n : d of the middle lift (lands in J^{n+1}),
  ///   k > n : d of a pointwise J^k form (stays in J^{k+1}).
  PolyForm rumin_d(int k, const PolyForm& w) const;
  BumpForm rumin_d(int k, const BumpForm& w) const;

  /// Whether the middle lift system was verified injective (always true for
  /// constructed instances; exposed for the acceptance checks).
  bool lift_system_injective() const { return lift_unique_; }

 private:
  int n_;
  GradedAlgebra g_;
  std::vector<RuminFiber> fibers_;
  std::vector<MultiIndex> horizontal_low_;   // Lambda^{n-1} V_1 monomials
  std::vector<MultiIndex> horizontal_high_;  // Lambda^{n+1} V_1 monomials
  QMatrix lefschetz_inverse_;                // (W_{n-1})^{-1}
  bool lift_unique_ = false;
};

/// Lemma-style weak identity residual:
///   integral(beta ^ d_{2n-k} eta) - (-1)^{k+1} integral(gamma ^ eta)
/// over eta's box, which must sit inside the domain. The test form eta is
/// J-valued for k < n, a quotient class for k = n (canonicalized here), and
/// arbitrary for k > n; beta and gamma must be J-members pointwise for
/// k > n. Zero exactly when gamma is the Rumin differential of beta.
Rational weak_identity_check(const RuminComplex& rc, int k, const PolyForm& beta,
                             const PolyForm& gamma, const BumpForm& eta, const Box& domain);

/// Rank-indexed conveniences over the shared cached complex.
PolyForm rumin_lift(int n, const PolyForm& alpha, int degree_bound = -1);
PolyForm rumin_d(int n, int k, const PolyForm& w);
Rational weak_identity_check(int n, int k, const PolyForm& beta, const PolyForm& gamma,
                             const BumpForm& eta, const Box& domain);

}  // namespace rumin
