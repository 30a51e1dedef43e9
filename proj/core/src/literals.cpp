#include "rumin/literals.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

// Minimal cursor over a literal; parsing here is shared by the invariant and
// polynomial form readers.
struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                       " in \"" + std::string(text) + "\"");
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer in \"" + std::string(text) + "\"");
    return std::stol(std::string(text.substr(start, pos - start)));
  }
  Rational rational() {
    long num = integer();
    if (eat('/')) {
      long den = integer();
      return Rational(num, den);
    }
    return Rational(num);
  }
};

struct ParsedTerm {
  Rational coeff{1};
  std::map<int, int> exponents;  // variable -> power; t maps to -1 sentinel
  MultiIndex monomial;           // theta indices; empty if none seen
  bool has_theta = false;
};

// One multiplicative term: rational, x<i>^e, t^e, th[...] factors joined by '*'.
ParsedTerm parse_term(Cursor& cur) {
  ParsedTerm term;
  bool first_factor = true;
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    char c = cur.peek();
    if (c == '+' || c == '-') break;
    if (!first_factor) {
      if (!cur.eat('*')) break;
      cur.skip_ws();
      c = cur.peek();
    }
    first_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      term.coeff *= cur.rational();
    } else if (c == 't' && cur.text.compare(cur.pos, 2, "th") == 0) {
      if (term.has_theta) throw ParseError("more than one th[...] factor in a term");
      cur.pos += 2;
      cur.expect('[');
      std::vector<int> indices;
      indices.push_back(static_cast<int>(cur.integer()));
      while (cur.eat(',')) indices.push_back(static_cast<int>(cur.integer()));
      cur.expect(']');
      term.monomial = MultiIndex(indices.begin(), indices.end());
      term.has_theta = true;
    } else if (c == 't') {
      ++cur.pos;
      int e = cur.eat('^') ? static_cast<int>(cur.integer()) : 1;
      term.exponents[-1] += e;
    } else if (c == 'x') {
      ++cur.pos;
      int v = static_cast<int>(cur.integer());
      if (v < 1) throw ParseError("variable index must be positive");
      int e = cur.eat('^') ? static_cast<int>(cur.integer()) : 1;
      term.exponents[v] += e;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in \"" +
                       std::string(cur.text) + "\"");
    }
  }
  return term;
}

std::vector<ParsedTerm> parse_sum(std::string_view text) {
  Cursor cur{text};
  std::vector<ParsedTerm> terms;
  bool negative = false;
  if (cur.eat('-')) negative = true;
  while (true) {
    if (cur.done()) throw ParseError("dangling sign or empty literal: \"" + std::string(text) + "\"");
    ParsedTerm term = parse_term(cur);
    if (negative) term.coeff = -term.coeff;
    terms.push_back(std::move(term));
    if (cur.done()) break;
    if (cur.eat('+'))
      negative = false;
    else if (cur.eat('-'))
      negative = true;
    else
      throw ParseError("expected '+' or '-' at position " + std::to_string(cur.pos) + " in \"" +
                       std::string(text) + "\"");
  }
  return terms;
}

}  // namespace

InvariantForm parse_invariant_form(int ambient, std::string_view text, int expected_degree) {
  std::vector<ParsedTerm> terms = parse_sum(text);
  int degree = expected_degree;
  for (const auto& t : terms) {
    if (!t.exponents.empty())
      throw ParseError("invariant form literal cannot contain coordinate variables");
    if (t.coeff.is_zero() && !t.has_theta) continue;  // bare 0 term
    int d = t.has_theta ? static_cast<int>(t.monomial.size()) : 0;
    if (degree < 0)
      degree = d;
    else if (d != degree && !t.coeff.is_zero())
      throw ParseError("mixed degrees in form literal");
  }
  InvariantForm f(ambient, degree < 0 ? 0 : degree);
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    auto [sign, mono] = normalize_monomial(t.monomial, ambient);
    if (sign == 0) continue;
    f.add_term(mono, sign < 0 ? -t.coeff : t.coeff);
  }
  return f;
}

PolyForm parse_poly_form(int n, std::string_view text, int expected_degree) {
  int nvars = 2 * n + 1;
  std::vector<ParsedTerm> terms = parse_sum(text);
  int degree = expected_degree;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    int d = t.has_theta ? static_cast<int>(t.monomial.size()) : 0;
    if (degree < 0)
      degree = d;
    else if (d != degree)
      throw ParseError("mixed degrees in form literal");
  }
  PolyForm f(n, degree < 0 ? 0 : degree);
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    std::vector<int> e(nvars, 0);
    for (const auto& [v, p] : t.exponents) {
      int var;
      if (v == -1)
        var = nvars - 1;
      else if (v >= 1 && v <= 2 * n)
        var = v - 1;
      else
        throw ParseError("variable x" + std::to_string(v) + " out of range for n=" +
                         std::to_string(n));
      e[var] += p;
    }
    Poly coeff(nvars);
    coeff.add_term(e, t.coeff);
    auto [sign, mono] = normalize_monomial(t.monomial, nvars);
    if (sign == 0) continue;
    if (sign < 0) coeff *= Rational(-1);
    PolyForm piece(n, degree < 0 ? 0 : degree);
    piece.add_term(mono, coeff);
    f += piece;
  }
  return f;
}

Poly parse_univariate(std::string_view text, char var) {
  Cursor cur{text};
  Poly out(1);
  bool negative = false;
  if (cur.eat('-')) negative = true;
  while (true) {
    if (cur.done()) throw ParseError("dangling sign or empty polynomial literal");
    Rational coeff(1);
    int exponent = 0;
    bool saw_factor = false;
    while (true) {
      cur.skip_ws();
      char c = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= cur.rational();
        saw_factor = true;
      } else if (c == var) {
        ++cur.pos;
        exponent += cur.eat('^') ? static_cast<int>(cur.integer()) : 1;
        saw_factor = true;
      } else {
        break;
      }
      if (!cur.eat('*')) break;
    }
    if (!saw_factor) throw ParseError("empty term in polynomial literal");
    out.add_term({exponent}, negative ? -coeff : coeff);
    if (cur.done()) break;
    if (cur.eat('+'))
      negative = false;
    else if (cur.eat('-'))
      negative = true;
    else
      throw ParseError("unexpected character in polynomial literal: \"" + std::string(text) +
                       "\"");
  }
  return out;
}

Box parse_box(std::string_view text) {
  Cursor cur{text};
  std::vector<std::pair<Rational, Rational>> iv;
  while (true) {
    cur.expect('[');
    Rational lo = cur.rational();
    cur.expect(',');
    Rational hi = cur.rational();
    cur.expect(']');
    iv.emplace_back(lo, hi);
    if (cur.done()) break;
    cur.expect('x');
  }
  return Box(std::move(iv));
}

namespace {

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ContactMap parse_contact_map(int n, std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty map literal");

  if (body.rfind("compose(", 0) == 0) {
    if (body.back() != ')') throw ParseError("unterminated compose(...)");
    std::string_view inner = body.substr(8, body.size() - 9);
    char sep = inner.find(';') != std::string_view::npos ? ';' : '|';
    std::vector<std::string> parts = split_top_level(inner, sep);
    if (parts.empty()) throw ParseError("compose needs at least one member");
    ContactMap out = parse_contact_map(n, parts.back());
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
      out = parse_contact_map(n, *it).compose(out);
    return out;
  }
  if (body == "identity") return ContactMap::identity(n);

  auto colon = body.find(':');
  std::string_view head = body.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? "" : body.substr(colon + 1);
  if (head == "dilate") {
    return ContactMap::dilation(n, Rational::parse(std::string(trim(args))));
  }
  if (head == "translate") {
    std::vector<std::string> coords = split_top_level(args, ',');
    if (static_cast<int>(coords.size()) != 2 * n + 1)
      throw ParseError("translate needs 2n+1 coordinates");
    HeisPoint g;
    for (int i = 0; i < 2 * n; ++i) g.x.push_back(Rational::parse(std::string(trim(coords[i]))));
    g.t = Rational::parse(std::string(trim(coords[2 * n])));
    return ContactMap::translation(g);
  }
  if (head == "shear") {
    int axis = -1;
    Poly p(1);
    bool have_p = false;
    for (const std::string& kv : split_top_level(args, ',')) {
      std::string_view item = trim(kv);
      if (item.rfind("j=", 0) == 0) {
        axis = std::stoi(std::string(item.substr(2)));
      } else if (item.rfind("p=", 0) == 0) {
        p = parse_univariate(item.substr(2));
        have_p = true;
      } else {
        throw ParseError("unknown shear argument: " + std::string(item));
      }
    }
    if (axis < 0 || !have_p) throw ParseError("shear needs j=<axis>,p=<poly>");
    return ContactMap::shear(n, axis, p);
  }
  throw ParseError("unknown map literal: \"" + std::string(body) + "\"");
}

GradedAlgebra group_from_json(const nlohmann::json& doc) {
  if (!doc.contains("layers")) throw ParseError("group description needs a layers field");
  std::vector<std::vector<int>> layers;
  int total = 0;
  for (const auto& layer : doc.at("layers")) {
    std::vector<int> l;
    for (const auto& idx : layer) {
      l.push_back(idx.get<int>());
      ++total;
    }
    layers.push_back(std::move(l));
  }
  std::map<int, InvariantForm> table;
  if (doc.contains("dtheta")) {
    for (const auto& [key, value] : doc.at("dtheta").items()) {
      int index = std::stoi(key);
      table.emplace(index, parse_invariant_form(total, value.get<std::string>(), 2));
    }
  }
  return GradedAlgebra(std::move(layers), std::move(table));
}

nlohmann::json group_to_json(const GradedAlgebra& g) {
  nlohmann::json doc;
  doc["layers"] = g.layers();
  nlohmann::json table = nlohmann::json::object();
  for (int i = 1; i <= g.dim(); ++i) {
    if (!g.dtheta(i).is_zero()) table[std::to_string(i)] = g.dtheta(i).to_string();
  }
  doc["dtheta"] = std::move(table);
  return doc;
}

GradedAlgebra load_group(const std::string& spec_or_path) {
  if (spec_or_path.rfind("heisenberg:", 0) == 0) {
    int n = std::stoi(spec_or_path.substr(11));
    return GradedAlgebra::heisenberg(n);
  }
  std::ifstream in(spec_or_path);
  if (!in) throw ParseError("cannot open group description file: " + spec_or_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad group description JSON: " + std::string(e.what()));
  }
  return group_from_json(doc);
}

}  // namespace rumin
