#include "rumin/poly_form.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

const GradedAlgebra& heis_algebra(int n) {
  static std::mutex mu;
  static std::map<int, GradedAlgebra> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GradedAlgebra::heisenberg(n)).first;
  return it->second;
}

}  // namespace

Box::Box(std::vector<std::pair<Rational, Rational>> iv) : intervals(std::move(iv)) {
  for (const auto& [a, b] : intervals)
    if (!(a < b)) throw PreconditionError("box interval with empty interior");
}

Box Box::cube(int dim, const Rational& lo, const Rational& hi) {
  return Box(std::vector<std::pair<Rational, Rational>>(dim, {lo, hi}));
}

bool Box::contains(const Box& inner) const {
  if (dim() != inner.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (inner.intervals[i].first < intervals[i].first ||
        intervals[i].second < inner.intervals[i].second)
      return false;
  return true;
}

std::string Box::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    if (i) os << "x";
    os << "[" << intervals[i].first.to_string() << "," << intervals[i].second.to_string() << "]";
  }
  return os.str();
}

PolyForm::PolyForm(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw DimensionError("poly form needs heisenberg rank >= 1");
  if (degree < 0) throw DegreeError("negative form degree");
}

PolyForm PolyForm::from_invariant(int n, const InvariantForm& f) {
  if (f.ambient() != 2 * n + 1) throw DimensionError("invariant form over the wrong basis");
  PolyForm out(n, f.degree());
  for (const auto& [J, c] : f.terms()) out.add_term(J, Poly::constant(2 * n + 1, c));
  return out;
}

PolyForm PolyForm::monomial(int n, const MultiIndex& J, Poly c) {
  PolyForm out(n, static_cast<int>(J.size()));
  out.add_term(J, std::move(c));
  return out;
}

Poly PolyForm::coeff(const MultiIndex& J) const {
  auto it = terms_.find(J);
  return it == terms_.end() ? Poly(2 * n_ + 1) : it->second;
}

int PolyForm::max_poly_degree() const {
  int deg = -1;
  for (const auto& [J, c] : terms_) deg = std::max(deg, c.total_degree());
  return deg;
}

void PolyForm::add_term(const MultiIndex& J, const Poly& c) {
  if (static_cast<int>(J.size()) != degree_) throw DegreeError("monomial length mismatch");
  if (c.nvars() != 2 * n_ + 1) throw DimensionError("coefficient in the wrong ring");
  for (size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 1 || J[i] > 2 * n_ + 1) throw DimensionError("monomial index out of range");
    if (i > 0 && J[i] <= J[i - 1]) throw PreconditionError("monomial indices not increasing");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(J, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm f(n_, degree_);
  for (const auto& [J, c] : terms_) f.terms_.emplace(J, -c);
  return f;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (n_ != o.n_) throw DimensionError("rank mismatch in form sum");
  if (degree_ != o.degree_) throw DegreeError("degree mismatch in form sum");
  for (const auto& [J, c] : o.terms_) add_term(J, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (n_ != o.n_) throw DimensionError("rank mismatch in form difference");
  if (degree_ != o.degree_) throw DegreeError("degree mismatch in form difference");
  for (const auto& [J, c] : o.terms_) add_term(J, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [J, v] : terms_) v *= c;
  return *this;
}

PolyForm PolyForm::scaled(const Poly& f) const {
  PolyForm out(n_, degree_);
  for (const auto& [J, c] : terms_) out.add_term(J, f * c);
  return out;
}

InvariantForm PolyForm::eval(const std::vector<Rational>& point) const {
  InvariantForm out(2 * n_ + 1, degree_);
  for (const auto& [J, c] : terms_) out.add_term(J, c.eval(point));
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.n() != b.n()) throw DimensionError("rank mismatch in wedge");
  PolyForm out(a.n(), a.degree() + b.degree());
  MultiIndex merged;
  for (const auto& [J, cj] : a.terms()) {
    for (const auto& [K, ck] : b.terms()) {
      int s = merge_sign(J, K, merged);
      if (s == 0) continue;
      Poly prod = cj * ck;
      if (s < 0) prod *= Rational(-1);
      out.add_term(merged, prod);
    }
  }
  return out;
}

std::string PolyForm::to_string() const {
  if (terms_.empty()) return "0";
  // Distribute polynomial coefficients over monomials so the output stays in
  // the flat literal grammar.
  std::ostringstream os;
  auto names = heis_var_names(2 * n_ + 1);
  bool first = true;
  for (const auto& [J, c] : terms_) {
    for (const auto& [e, v] : c.terms()) {
      Rational value = v;
      if (first) {
        if (value.sign() < 0) {
          os << "-";
          value = -value;
        }
        first = false;
      } else {
        os << (value.sign() < 0 ? " - " : " + ");
        if (value.sign() < 0) value = -value;
      }
      bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
      bool unit = (value == Rational(1));
      bool wrote = false;
      if (!unit || (!any_var && J.empty())) {
        os << value.to_string();
        wrote = true;
      }
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
      if (!J.empty()) {
        if (wrote) os << "*";
        os << "th[";
        for (size_t i = 0; i < J.size(); ++i) os << (i ? "," : "") << J[i];
        os << "]";
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyForm& f) { return os << f.to_string(); }

Poly horizontal_derive(int n, int i, const Poly& f) {
  int nvars = 2 * n + 1;
  if (f.nvars() != nvars) throw DimensionError("polynomial in the wrong ring");
  if (i < 1 || i > nvars) throw DimensionError("frame index out of range");
  int tvar = nvars - 1;
  if (i == nvars) return f.derivative(tvar);
  Poly out = f.derivative(i - 1);
  Poly dt = f.derivative(tvar);
  if (!dt.is_zero()) {
    int partner = (i % 2 == 1) ? i + 1 : i - 1;  // symplectic partner coordinate
    Poly twist = Poly::variable(nvars, partner - 1) * dt;
    twist *= Rational(1, 2);
    if (i % 2 == 1)
      out += twist;
    else
      out -= twist;
  }
  return out;
}

PolyForm d_poly(const PolyForm& w) {
  int n = w.n();
  const GradedAlgebra& g = heis_algebra(n);
  int N = 2 * n + 1;
  PolyForm out(n, w.degree() + 1);
  MultiIndex merged;
  for (const auto& [J, c] : w.terms()) {
    // sum_i (X_i c) theta_i ^ theta_J
    for (int i = 1; i <= N; ++i) {
      Poly xc = horizontal_derive(n, i, c);
      if (xc.is_zero()) continue;
      int s = merge_sign({i}, J, merged);
      if (s == 0) continue;
      if (s < 0) xc *= Rational(-1);
      out.add_term(merged, xc);
    }
    // c * d(theta_J)
    InvariantForm dth = d_invariant(g, InvariantForm::monomial(N, J));
    for (const auto& [K, v] : dth.terms()) out.add_term(K, v * c);
  }
  return out;
}

PolyForm reduce_pointwise(const SubspaceBasis& basis, const PolyForm& w) {
  if (basis.ambient() != w.ambient()) throw DimensionError("ambient mismatch in reduce");
  if (basis.degree() != w.degree()) throw DegreeError("degree mismatch in reduce");
  PolyForm out = w;
  for (size_t r = 0; r < basis.rows().size(); ++r) {
    Poly c = out.coeff(basis.pivots()[r]);
    if (c.is_zero()) continue;
    // Subtract c times the invariant row; only non-pivot monomials change.
    for (const auto& [J, v] : basis.rows()[r].terms()) {
      Poly delta = c;
      delta *= -v;
      out.add_term(J, delta);
    }
  }
  return out;
}

Poly bump_poly(int nvars, const Box& box, BumpSmoothness s) {
  if (box.dim() != nvars) throw DimensionError("bump box dimension mismatch");
  Poly out = Poly::constant(nvars, Rational(1));
  int e = (s == BumpSmoothness::c1) ? 2 : 3;
  for (int v = 0; v < nvars; ++v) {
    const auto& [a, b] = box.intervals[v];
    Rational width = b - a;
    // s(x) = (x - a) / (b - a), factor s^e (1 - s)^e
    Poly sx = Poly::variable(nvars, v);
    sx.add_term(std::vector<int>(nvars, 0), -a);
    sx *= Rational(1) / width;
    Poly one_minus = Poly::constant(nvars, Rational(1)) - sx;
    Poly factor = Poly::constant(nvars, Rational(1));
    for (int i = 0; i < e; ++i) factor = factor * sx;
    for (int i = 0; i < e; ++i) factor = factor * one_minus;
    out = out * factor;
  }
  return out;
}

BumpForm BumpForm::make(const Box& box, const PolyForm& base, BumpSmoothness s) {
  if (box.dim() != base.ambient()) throw DimensionError("bump box dimension mismatch");
  BumpForm out;
  out.box = box;
  out.form = base.scaled(bump_poly(base.ambient(), box, s));
  return out;
}

Rational integrate_top(const PolyForm& w, const Box& box) {
  int N = w.ambient();
  if (w.degree() != N) throw DegreeError("integrate_top needs a top-degree form");
  if (box.dim() != N) throw DimensionError("box dimension mismatch");
  MultiIndex top(N);
  for (int i = 0; i < N; ++i) top[i] = i + 1;
  Poly c = w.coeff(top);
  if (c.is_zero()) return Rational(0);
  return c.integrate_box(box.intervals);
}

Rational integrate_top(const BumpForm& w, const Box& domain) {
  if (!domain.contains(w.box))
    throw SupportError("compact form's box leaks outside the integration domain");
  return integrate_top(w.form, w.box);
}

BumpForm wedge(const PolyForm& a, const BumpForm& b) {
  return BumpForm{b.box, wedge(a, b.form)};
}

BumpForm wedge(const BumpForm& a, const PolyForm& b) {
  return BumpForm{a.box, wedge(a.form, b)};
}

BumpForm d_poly(const BumpForm& w) { return BumpForm{w.box, d_poly(w.form)}; }

}  // namespace rumin
