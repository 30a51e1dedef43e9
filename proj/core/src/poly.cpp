#include "rumin/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int v) {
  if (v < 0 || v >= nvars) throw DimensionError("variable index out of range");
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[v] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

Rational Poly::constant_value() const {
  auto it = terms_.find(std::vector<int>(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

void Poly::add_term(const std::vector<int>& exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw DimensionError("exponent vector size mismatch");
  for (int e : exponents)
    if (e < 0) throw PreconditionError("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw DimensionError("variable count mismatch in poly sum");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw DimensionError("variable count mismatch in poly difference");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("variable count mismatch in poly product");
  Poly out(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::derivative(int v) const {
  if (v < 0 || v >= nvars_) throw DimensionError("variable index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    std::vector<int> d = e;
    --d[v];
    out.add_term(d, Rational(e[v]) * c);
  }
  return out;
}

Poly Poly::antiderivative(int v) const {
  if (v < 0 || v >= nvars_) throw DimensionError("variable index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> d = e;
    ++d[v];
    out.add_term(d, c / Rational(d[v]));
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw DimensionError("substitute needs one image per variable");
  int target_vars = nvars_ == 0 ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target_vars) throw DimensionError("substitution images in mixed rings");

  // Memoized powers per variable.
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](int v, int e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target_vars, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  Poly out(target_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target_vars, c);
    for (int v = 0; v < nvars_; ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    out += term;
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DimensionError("eval point size mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < nvars_; ++v)
      for (int i = 0; i < e[v]; ++i) term *= point[v];
    acc += term;
  }
  return acc;
}

double Poly::eval_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DimensionError("eval point size mismatch");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (int v = 0; v < nvars_; ++v)
      for (int i = 0; i < e[v]; ++i) term *= point[v];
    acc += term;
  }
  return acc;
}

Rational Poly::integrate_box(const std::vector<std::pair<Rational, Rational>>& box) const {
  if (static_cast<int>(box.size()) != nvars_)
    throw DimensionError("box dimension mismatch in integrate");
  // Iterated exact integration; each step eliminates the last variable.
  Poly cur = *this;
  for (int v = nvars_ - 1; v >= 0; --v) {
    Poly anti = cur.antiderivative(v);
    Poly next(nvars_);
    for (const auto& [e, c] : anti.terms()) {
      Rational hi(1), lo(1);
      for (int i = 0; i < e[v]; ++i) {
        hi *= box[v].second;
        lo *= box[v].first;
      }
      std::vector<int> rest = e;
      rest[v] = 0;
      next.add_term(rest, c * (hi - lo));
    }
    cur = next;
  }
  return cur.constant_value();
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    if (first) {
      if (v.sign() < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      if (v.sign() < 0) v = -v;
    }
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    bool unit = (v == Rational(1));
    if (!unit || !any_var) os << v.to_string();
    bool need_star = !unit || !any_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string Poly::to_string() const { return to_string(heis_var_names(nvars_)); }

std::vector<std::string> heis_var_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 1; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("t");
  return names;
}

}  // namespace rumin
