#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rumin/contact_map.hpp"
#include "rumin/poly_form.hpp"

namespace rumin {

/// Form literal: `c * th[J]` terms joined by +/-, e.g. "3/2*th[1,3] - th[2,3]".
/// All terms must share one degree; pass expected_degree >= 0 to also pin it
/// (required to type the literal "0").
InvariantForm parse_invariant_form(int ambient, std::string_view text, int expected_degree = -1);

/// Polynomial-coefficient form literal, e.g. "3/2*x1^2*t*th[1,3] - th[2,3]".
PolyForm parse_poly_form(int n, std::string_view text, int expected_degree = -1);

/// Univariate polynomial in the named variable, e.g. "x^2 - 1/2*x".
Poly parse_univariate(std::string_view text, char var = 'x');

/// Box literal "[a,b]x[c,d]x[e,f]" with rational endpoints.
Box parse_box(std::string_view text);

/// Map literal: "identity", "dilate:3/2", "translate:1,0,0",
/// "shear:j=1,p=x^2", or "compose(m1; m2; ...)" where the rightmost member
/// is applied first. Translation literals carry 2n+1 coordinates.
ContactMap parse_contact_map(int n, std::string_view text);

/// Group description document: {"layers": [[1,2],[3]], "dtheta": {"3": "th[1,2]"}}.
GradedAlgebra group_from_json(const nlohmann::json& doc);
nlohmann::json group_to_json(const GradedAlgebra& g);

/// Loads "heisenberg:n" as a built-in shortcut, otherwise reads the path as
/// a group description JSON file.
GradedAlgebra load_group(const std::string& spec_or_path);

}  // namespace rumin
