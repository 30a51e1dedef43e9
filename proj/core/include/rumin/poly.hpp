#pragma once

#include <map>
#include <string>
#include <vector>

#include "rumin/rational.hpp"

namespace rumin {

/// Sparse multivariate polynomial with rational coefficients. Variables are
/// indexed 0..nvars-1; on H_n the convention is x_1..x_{2n} then t, so
/// nvars = 2n+1 and t is the last variable. Monomials are exponent vectors
/// in a map, giving a canonical sparse form; zero coefficients are pruned.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int v);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of the unit monomial
  int total_degree() const;         // -1 for the zero polynomial
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly derivative(int v) const;
  Poly antiderivative(int v) const;

  /// Substitutes images[v] for variable v; images live in a common ring.
  Poly substitute(const std::vector<Poly>& images) const;

  Rational eval(const std::vector<Rational>& point) const;
  double eval_double(const std::vector<double>& point) const;

  /// Definite integral over a coordinate box, iterated exactly.
  Rational integrate_box(const std::vector<std::pair<Rational, Rational>>& box) const;

  /// Renders in the literal syntax with the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;
  /// Default names x1..x_{nvars-1}, t.
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

/// Variable names x1..x_{2n}, t for polynomials on H_n.
std::vector<std::string> heis_var_names(int nvars);

}  // namespace rumin
