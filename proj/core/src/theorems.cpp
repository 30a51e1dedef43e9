#include "rumin/theorems.hpp"

#include "rumin/errors.hpp"

namespace rumin {

Rational theorem_j_check(const RuminComplex& rc, const ContactMap& f, int k,
                         const PolyForm& alpha, const BumpForm& eta, const Box& domain) {
  int N = rc.N();
  if (f.n() != rc.n()) throw DimensionError("map and complex rank mismatch");
  if (alpha.degree() != k) throw DegreeError("alpha degree mismatch");
  if (eta.form.degree() != N - k - 1) throw DegreeError("eta must have degree N-k-1");
  if (!domain.contains(eta.box))
    throw SupportError("test form support leaks outside the domain box");
  if (!rc.in_J_pointwise(k, alpha))
    throw MembershipError("alpha is not pointwise in the J^" + std::to_string(k) + " fiber");

  PolyForm d_alpha = d_poly(alpha);
  if (!rc.in_J_pointwise(k + 1, d_alpha))
    throw InternalError("d left the J ideal, which is impossible for a differential ideal");

  Rational lhs = integrate_top(wedge(pansu_pullback(f, d_alpha), eta), domain);
  Rational rhs = integrate_top(wedge(pansu_pullback(f, alpha), d_poly(eta)), domain);
  Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(k+1)
  return lhs - sign * rhs;
}

Rational rumin_chain_check(const RuminComplex& rc, const ContactMap& f, int k,
                           const PolyForm& alpha, const BumpForm& eta, const Box& domain) {
  int n = rc.n();
  if (f.n() != n) throw DimensionError("map and complex rank mismatch");
  if (k < 0 || k > 2 * n) throw DegreeError("chain check degree out of range 0..2n");
  if (alpha.degree() != k) throw DegreeError("alpha degree mismatch");
  int j = 2 * n - k;  // degree of the test form
  if (eta.form.degree() != j) throw DegreeError("eta must have degree 2n-k");
  if (!domain.contains(eta.box))
    throw SupportError("test form support leaks outside the domain box");

  // Prepare alpha: canonical representative below the middle, J member above.
  PolyForm alpha_rep = alpha;
  if (k <= n) {
    alpha_rep = rc.canonical_rep(k, alpha);
  } else if (!rc.in_J_pointwise(k, alpha)) {
    throw MembershipError("alpha is not pointwise in the J^" + std::to_string(k) + " fiber");
  }

  // Prepare eta and its Rumin differential.
  BumpForm eta_used = eta;
  BumpForm d_eta{eta.box, PolyForm(n, j + 1)};
  if (j > n) {
    if (!rc.in_J_pointwise(j, eta.form))
      throw MembershipError("eta is not pointwise in the J^" + std::to_string(j) + " fiber");
    d_eta = d_poly(eta_used);
  } else {
    eta_used.form = rc.canonical_rep(j, eta.form);
    d_eta = rc.rumin_d(j, eta_used);
  }

  PolyForm d_alpha = rc.rumin_d(k, alpha_rep);
  PolyForm pulled_alpha = pansu_pullback(f, alpha_rep);
  PolyForm pulled_d_alpha = pansu_pullback(f, d_alpha);
  if (k > n && !rc.in_J_pointwise(k, pulled_alpha))
    throw InternalError("pullback left the J fiber despite an invertible differential");

  Rational lhs = integrate_top(wedge(pulled_alpha, d_eta), domain);
  Rational rhs = integrate_top(wedge(pulled_d_alpha, eta_used), domain);
  Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(k+1)
  return lhs - sign * rhs;
}

}  // namespace rumin
