#include "rumin/rational.hpp"

#include <cctype>
#include <ostream>

namespace rumin {

Rational::Rational(long n, long d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string text(s);
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid(text, true)) throw ParseError("bad rational literal: " + text);
    mpq_class q(text);
    q.canonicalize();
    return Rational(std::move(q));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw ParseError("bad rational literal: " + text);
  if (mpz_class(den) == 0) throw ParseError("zero denominator in literal: " + text);
  mpq_class q(text);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace rumin
