#pragma once

#include "pseudocurve/branch_model.hpp"
#include "pseudocurve/cusp_combinatorics.hpp"

#include <string>
#include <string_view>

namespace pseudocurve {

/// {"ambient_dim": n, "truncation_order": T, "terms": [{"exp": q, "coeff": [[re, im], ...]}]}
/// Rationals are written as "p/q" strings and integers as decimal strings; JSON integers are also
/// accepted on input.
std::string branch_to_json(const Branch& b);
/// Throws Error(ParseError) on malformed JSON and Error(InvalidBranch) on invalid content.
Branch branch_from_json(std::string_view text);

/// {"exponents": [p0, p1, ...]}
std::string cusp_type_to_json(const CuspType& p);
CuspType cusp_type_from_json(std::string_view text);

}  // namespace pseudocurve
