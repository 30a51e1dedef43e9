#include "rumin/invariant_form.hpp"

#include <ostream>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

InvariantForm::InvariantForm(int ambient, int degree) : ambient_(ambient), degree_(degree) {
  if (ambient < 0) throw DimensionError("negative ambient dimension");
  if (degree < 0) throw DegreeError("negative form degree");
}

InvariantForm InvariantForm::monomial(int ambient, const MultiIndex& J, const Rational& c) {
  InvariantForm f(ambient, static_cast<int>(J.size()));
  f.add_term(J, c);
  return f;
}

InvariantForm InvariantForm::scalar(int ambient, const Rational& c) {
  return monomial(ambient, MultiIndex{}, c);
}

Rational InvariantForm::coeff(const MultiIndex& J) const {
  auto it = terms_.find(J);
  return it == terms_.end() ? Rational(0) : it->second;
}

void InvariantForm::add_term(const MultiIndex& J, const Rational& c) {
  if (static_cast<int>(J.size()) != degree_)
    throw DegreeError("monomial length " + std::to_string(J.size()) +
                      " does not match form degree " + std::to_string(degree_));
  for (size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 1 || J[i] > ambient_) throw DimensionError("monomial index out of range");
    if (i > 0 && J[i] <= J[i - 1]) throw PreconditionError("monomial indices not increasing");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(J, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

InvariantForm InvariantForm::operator-() const {
  InvariantForm f(ambient_, degree_);
  for (const auto& [J, c] : terms_) f.terms_.emplace(J, -c);
  return f;
}

InvariantForm& InvariantForm::operator+=(const InvariantForm& o) {
  if (ambient_ != o.ambient_) throw DimensionError("ambient mismatch in form sum");
  if (degree_ != o.degree_) throw DegreeError("degree mismatch in form sum");
  for (const auto& [J, c] : o.terms_) add_term(J, c);
  return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& o) {
  if (ambient_ != o.ambient_) throw DimensionError("ambient mismatch in form difference");
  if (degree_ != o.degree_) throw DegreeError("degree mismatch in form difference");
  for (const auto& [J, c] : o.terms_) add_term(J, -c);
  return *this;
}

InvariantForm& InvariantForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [J, v] : terms_) v *= c;
  return *this;
}

bool operator==(const InvariantForm& a, const InvariantForm& b) {
  return a.ambient_ == b.ambient_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  if (a.ambient() != b.ambient())
    throw DimensionError("ambient mismatch in wedge: " + std::to_string(a.ambient()) + " vs " +
                         std::to_string(b.ambient()));
  InvariantForm out(a.ambient(), a.degree() + b.degree());
  MultiIndex merged;
  for (const auto& [J, cj] : a.terms()) {
    for (const auto& [K, ck] : b.terms()) {
      int s = merge_sign(J, K, merged);
      if (s == 0) continue;
      out.add_term(merged, s > 0 ? cj * ck : -(cj * ck));
    }
  }
  return out;
}

std::string InvariantForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [J, c] : terms_) {
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
    bool unit = (v == Rational(1));
    if (!unit || J.empty()) os << v.to_string();
    if (!J.empty()) {
      if (!unit) os << "*";
      os << "th[";
      for (size_t i = 0; i < J.size(); ++i) os << (i ? "," : "") << J[i];
      os << "]";
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const InvariantForm& f) {
  return os << f.to_string();
}

}  // namespace rumin
