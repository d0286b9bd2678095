#pragma once

#include <string>
#include <vector>

#include "alexpoly/branch.hpp"

namespace alexpoly {

// Line-oriented curve files:
//
//     # comment
//     branch <name>: x = <poly>, y = <poly>
//
// where <poly> is a sum of terms c*t^k with integer or p/q coefficients;
// `t` means t^1, `0` is the zero polynomial, term order is free. Constant
// terms are rejected (a parametrization must vanish at t = 0). Errors carry
// line and column.
std::vector<branch_param> parse_curve(const std::string& text);

std::string render_curve(const std::vector<branch_param>& branches);
std::string render_poly(const uni_poly& p);

// Built-in example curves, emitted by `alexpoly example <name>` and shipped
// as files under curves/.
const std::vector<std::pair<std::string, std::string>>& builtin_examples();
std::string builtin_example(const std::string& name); // throws SyntaxError if unknown

} // namespace alexpoly
