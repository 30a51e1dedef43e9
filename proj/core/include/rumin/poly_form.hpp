#pragma once

#include <map>
#include <string>
#include <vector>

#include "rumin/graded_algebra.hpp"
#include "rumin/poly.hpp"
#include "rumin/subspace.hpp"

namespace rumin {

/// Rational box in the coordinates (x_1..x_{2n}, t) with nonempty interior.
struct Box {
  std::vector<std::pair<Rational, Rational>> intervals;

  Box() = default;
  explicit Box(std::vector<std::pair<Rational, Rational>> iv);
  static Box cube(int dim, const Rational& lo, const Rational& hi);

  int dim() const { return static_cast<int>(intervals.size()); }
  bool contains(const Box& inner) const;
  std::string to_string() const;
};

/// Differential form on H_n with polynomial coefficients in the
/// left-invariant coframe theta_1..theta_{2n+1}.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int n, int degree);

  static PolyForm from_invariant(int n, const InvariantForm& f);
  static PolyForm monomial(int n, const MultiIndex& J, Poly c);

  int n() const { return n_; }
  int ambient() const { return 2 * n_ + 1; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Poly>& terms() const { return terms_; }
  Poly coeff(const MultiIndex& J) const;
  int max_poly_degree() const;  // -1 when zero

  void add_term(const MultiIndex& J, const Poly& c);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Rational& c);
  /// Scales every coefficient by a function.
  PolyForm scaled(const Poly& f) const;

  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& c, PolyForm f) { return f *= c; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Coefficients evaluated at a point, as an invariant form.
  InvariantForm eval(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Poly> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
std::ostream& operator<<(std::ostream& os, const PolyForm& f);

/// Left-invariant frame derivative X_i f in the coordinate model
///   X_{2j-1} = d/dx_{2j-1} + (1/2) x_{2j} d/dt,
///   X_{2j}   = d/dx_{2j}   - (1/2) x_{2j-1} d/dt,
///   X_{2n+1} = d/dt.
/// Polynomial degree never increases.
Poly horizontal_derive(int n, int i, const Poly& f);

/// Exterior derivative: df = sum_i (X_i f) theta_i on functions, extended as
/// an antiderivation using the dtheta table of the Heisenberg algebra.
PolyForm d_poly(const PolyForm& w);

/// Pointwise elimination of the basis' pivot monomials; coefficients are
/// polynomial multiples of the rows. The result is supported on non-pivot
/// monomials only, and is zero iff w lies in the span pointwise.
PolyForm reduce_pointwise(const SubspaceBasis& basis, const PolyForm& w);

/// Compactly supported form: polynomial on the declared box and zero
/// outside. make() multiplies a polynomial form by the separable bump
///   b(s) = s^2 (1-s)^2   (C^1)   or   b(s) = s^3 (1-s)^3   (C^2)
/// rescaled to each interval of the box, which pins the support invariant.
/// Derived forms (differentials, wedges) keep the box and stay supported.
enum class BumpSmoothness { c1, c2 };

struct BumpForm {
  Box box;
  PolyForm form;

  static BumpForm make(const Box& box, const PolyForm& base, BumpSmoothness s);
  bool is_zero() const { return form.is_zero(); }
};

/// The separable bump polynomial on the box (valid inside the box only).
Poly bump_poly(int nvars, const Box& box, BumpSmoothness s);

/// Exact integral of a top-degree form over a box, using
/// theta_1 ^ ... ^ theta_{2n+1} = dx_1 ^ ... ^ dx_{2n} ^ dt.
Rational integrate_top(const PolyForm& w, const Box& box);

/// Integral of a compactly supported top form over its own box; the box must
/// sit inside the enclosing domain (SupportError otherwise).
Rational integrate_top(const BumpForm& w, const Box& domain);

BumpForm wedge(const PolyForm& a, const BumpForm& b);
BumpForm wedge(const BumpForm& a, const PolyForm& b);
BumpForm d_poly(const BumpForm& w);

}  // namespace rumin
