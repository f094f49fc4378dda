#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "thomcalc/factored_rational.hpp"
#include "thomcalc/linear_form.hpp"
#include "thomcalc/polynomial.hpp"

namespace thomcalc {

using json = nlohmann::json;

struct TextOptions {
  // Drop c0 factors (c0 = 1 in every Chern assignment).
  bool suppress_c0 = false;
};

std::string to_text(const Polynomial& p, const TextOptions& opts = {});
std::string to_text(const Monomial& m, const TextOptions& opts = {});
std::string to_text(const LinearForm& f);

Variable parse_variable(std::string_view text);
Polynomial parse_polynomial(std::string_view text);
LinearForm parse_linear_form(std::string_view text);

json variable_to_json(Variable v);
Variable variable_from_json(const json& j);

// {"vars": [{"family", "index"}...], "terms": [{"coeff": "n/d", "exps": [...]}]}
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// {"constant": "r", "coeffs": {"z_3": "-1", ...}}
json to_json(const LinearForm& f);
LinearForm linear_form_from_json(const json& j);

}  // namespace thomcalc
