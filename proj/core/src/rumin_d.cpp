#include "rumin/rumin_d.hpp"

#include <map>
#include <mutex>

#include "rumin/errors.hpp"

namespace rumin {

RuminComplex::RuminComplex(int n) : n_(n), g_(GradedAlgebra::heisenberg(n)) {
  for (int k = 0; k <= N(); ++k) fibers_.push_back(rumin_fiber(g_, k));

  // Middle-degree lift system: the Lefschetz map W_{n-1} between horizontal
  // monomial bases is square and invertible; its inverse drives the solve.
  horizontal_low_ = monomials_of_degree(2 * n_, n_ - 1);
  horizontal_high_ = monomials_of_degree(2 * n_, n_ + 1);
  LefschetzReport rep = lefschetz(n_, n_ - 1);
  if (rep.dim_source != rep.dim_target || rep.rank != rep.dim_source)
    throw InternalError("middle Lefschetz map is not bijective; lift system is ill-posed");
  lefschetz_inverse_ = rep.matrix.inverse();
  lift_unique_ = true;
}

const RuminComplex& RuminComplex::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RuminComplex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<RuminComplex>(n)).first;
  return *it->second;
}

const RuminFiber& RuminComplex::fiber(int k) const {
  if (k < 0 || k > N()) throw DegreeError("fiber degree out of range");
  return fibers_[k];
}

PolyForm RuminComplex::canonical_rep(int k, const PolyForm& w) const {
  if (w.degree() != k) throw DegreeError("representative degree mismatch");
  return reduce_pointwise(fiber(k).ideal_basis, w);
}

bool RuminComplex::in_J_pointwise(int k, const PolyForm& w) const {
  if (w.degree() != k) throw DegreeError("degree mismatch in membership test");
  if (k > n_) return reduce_pointwise(fiber(k).basis, w).is_zero();
  return reduce_pointwise(ideal_J_fiber(g_, k), w).is_zero();
}

bool RuminComplex::in_I_pointwise(int k, const PolyForm& w) const {
  if (w.degree() != k) throw DegreeError("degree mismatch in membership test");
  return reduce_pointwise(fiber(k).ideal_basis, w).is_zero();
}

PolyForm RuminComplex::rumin_lift(const PolyForm& alpha, int degree_bound) const {
  if (alpha.degree() != n_) throw DegreeError("lift is defined in degree n only");
  if (degree_bound >= 0 && alpha.max_poly_degree() > degree_bound)
    throw PreconditionError("input polynomial degree exceeds the declared bound");
  if (!lift_unique_) throw InternalError("lift system lost injectivity");

  PolyForm d_alpha = d_poly(alpha);

  // Horizontal residue of d(alpha): coefficients on monomials omitting 2n+1.
  int nvars = N();
  std::vector<Poly> rhs(horizontal_high_.size(), Poly(nvars));
  {
    std::map<MultiIndex, int> row_of;
    for (size_t i = 0; i < horizontal_high_.size(); ++i)
      row_of[horizontal_high_[i]] = static_cast<int>(i);
    for (const auto& [J, c] : d_alpha.terms()) {
      auto it = row_of.find(J);
      if (it != row_of.end()) rhs[it->second] = c;
    }
  }

  // a = -(W_{n-1})^{-1} (horizontal residue), coefficientwise.
  PolyForm correction(n_, n_);
  for (size_t j = 0; j < horizontal_low_.size(); ++j) {
    Poly a(nvars);
    for (size_t k = 0; k < horizontal_high_.size(); ++k) {
      const Rational& m = lefschetz_inverse_.at(static_cast<int>(j), static_cast<int>(k));
      if (m.is_zero() || rhs[k].is_zero()) continue;
      Poly contrib = rhs[k];
      contrib *= -m;
      a += contrib;
    }
    if (a.is_zero()) continue;
    std::vector<int> seq;
    seq.push_back(N());
    seq.insert(seq.end(), horizontal_low_[j].begin(), horizontal_low_[j].end());
    auto [sign, mono] = normalize_monomial(seq, N());
    if (sign < 0) a *= Rational(-1);
    correction.add_term(mono, a);
  }

  PolyForm lifted = alpha + correction;
  if (degree_bound >= 0 && correction.max_poly_degree() > degree_bound)
    throw InternalError("lift correction exceeded the degree bound");
  if (!in_J_pointwise(n_ + 1, d_poly(lifted)))
    throw InternalError("middle lift failed: d(lift) is not pointwise in J^{n+1}");
  return lifted;
}

PolyForm RuminComplex::rumin_d(int k, const PolyForm& w) const {
  if (k < 0 || k > N()) throw DegreeError("rumin_d degree out of range");
  if (w.degree() != k) throw DegreeError("form degree does not match k");
  if (k == N()) return PolyForm(n_, k + 1);  // the complex ends here
  if (k < n_) return reduce_pointwise(fiber(k + 1).ideal_basis, d_poly(w));
  if (k == n_) return d_poly(rumin_lift(w));
  if (!in_J_pointwise(k, w))
    throw MembershipError("rumin_d input is not pointwise in the J^" + std::to_string(k) +
                          " fiber");
  PolyForm out = d_poly(w);
  if (!in_J_pointwise(k + 1, out))
    throw InternalError("d left the J ideal, which is impossible for a differential ideal");
  return out;
}

BumpForm RuminComplex::rumin_d(int k, const BumpForm& w) const {
  return BumpForm{w.box, rumin_d(k, w.form)};
}

Rational weak_identity_check(const RuminComplex& rc, int k, const PolyForm& beta,
                             const PolyForm& gamma, const BumpForm& eta, const Box& domain) {
  int n = rc.n();
  int N = rc.N();
  if (k < 0 || k >= N) throw DegreeError("weak identity degree out of range 0..2n");
  if (beta.degree() != k) throw DegreeError("beta degree mismatch");
  if (gamma.degree() != k + 1) throw DegreeError("gamma degree mismatch");
  if (eta.form.degree() != 2 * n - k) throw DegreeError("eta degree mismatch");
  if (!domain.contains(eta.box))
    throw SupportError("test form support leaks outside the domain box");

  BumpForm eta_used = eta;
  BumpForm d_eta{eta.box, PolyForm(n, 2 * n - k + 1)};
  if (k < n) {
    if (!rc.in_J_pointwise(2 * n - k, eta.form))
      throw MembershipError("test form must be pointwise J-valued in this degree range");
    d_eta = d_poly(eta_used);
  } else if (k == n) {
    eta_used.form = rc.canonical_rep(n, eta.form);
    d_eta = rc.rumin_d(n, eta_used);
  } else {
    if (!rc.in_J_pointwise(k, beta))
      throw MembershipError("beta must be pointwise J-valued in this degree range");
    d_eta = d_poly(eta_used);
  }

  Rational lhs = integrate_top(wedge(beta, d_eta), domain);
  Rational rhs = integrate_top(wedge(gamma, eta_used), domain);
  Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(k+1)
  return lhs - sign * rhs;
}

PolyForm rumin_lift(int n, const PolyForm& alpha, int degree_bound) {
  return RuminComplex::get(n).rumin_lift(alpha, degree_bound);
}

PolyForm rumin_d(int n, int k, const PolyForm& w) {
  return RuminComplex::get(n).rumin_d(k, w);
}

Rational weak_identity_check(int n, int k, const PolyForm& beta, const PolyForm& gamma,
                             const BumpForm& eta, const Box& domain) {
  return weak_identity_check(RuminComplex::get(n), k, beta, gamma, eta, domain);
}

}  // namespace rumin
