#pragma once

#include <map>
#include <string>

#include "rumin/multi_index.hpp"
#include "rumin/rational.hpp"

namespace rumin {

/// Left-invariant form: a sparse rational linear combination of wedge
/// monomials theta_J of a fixed degree over a fixed ambient basis 1..N.
/// Zero coefficients are never stored.
class InvariantForm {
 public:
  InvariantForm() = default;
  InvariantForm(int ambient, int degree);

  static InvariantForm monomial(int ambient, const MultiIndex& J, const Rational& c = Rational(1));
  /// Degree-0 constant form.
  static InvariantForm scalar(int ambient, const Rational& c);

  int ambient() const { return ambient_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  Rational coeff(const MultiIndex& J) const;

  /// Adds c * theta_J (J must be strictly increasing of the right degree).
  void add_term(const MultiIndex& J, const Rational& c);

  InvariantForm operator-() const;
  InvariantForm& operator+=(const InvariantForm& o);
  InvariantForm& operator-=(const InvariantForm& o);
  InvariantForm& operator*=(const Rational& c);

  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
  friend InvariantForm operator*(const Rational& c, InvariantForm f) { return f *= c; }

  friend bool operator==(const InvariantForm& a, const InvariantForm& b);

  /// Renders in the literal syntax, e.g. "3/2*th[1,3] - th[2,3]"; "0" when zero.
  std::string to_string() const;

 private:
  int ambient_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Rational> terms_;
};

/// Exterior product. Bilinear, sign by permutation parity of concatenated
/// index sequences. Throws DimensionError on mismatched ambient bases.
InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);

std::ostream& operator<<(std::ostream& os, const InvariantForm& f);

}  // namespace rumin
