#pragma once

#include "pseudocurve/node_geometry.hpp"
#include "pseudocurve/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pseudocurve::cli {

std::vector<std::string> split(std::string_view text, char sep);
std::vector<int> parse_int_list(std::string_view text);
/// Comma separated coefficients a0,a1,...; each is "p/q" or "re:im".
Polynomial parse_polynomial(std::string_view text);
/// "0.1", "0.1+0.2i", "-0.3i", "1e-2-3e-3i".
Complex parse_complex(std::string_view text);

enum class ModeLayout { Auto, Real, Complex };

/// "m:c,c,...;m:..." where each mode lists real coordinates or (re, im) pairs. Auto reads pairs
/// only when every mode has an even count.
std::vector<LaurentMode> parse_modes(std::string_view text, ModeLayout layout);

}  // namespace pseudocurve::cli
