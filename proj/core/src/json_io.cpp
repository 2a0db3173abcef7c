#include "pseudocurve/json_io.hpp"

#include "pseudocurve/error.hpp"

#include <json.hpp>

namespace pseudocurve {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

BigInt read_integer(const json& j) {
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

int read_small(const json& j, const char* field) {
  const BigInt v = read_integer(j);
  if (v > 1'000'000 || v < -1'000'000) throw Error(ErrorKind::ParseError, std::string(field) + " is out of range");
  return static_cast<int>(v);
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'");
  return obj.at(name);
}

Rational read_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(read_integer(j));
}

}  // namespace

std::string branch_to_json(const Branch& b) {
  json terms = json::array();
  for (const auto& term : b.terms()) {
    json coeff = json::array();
    for (const auto& c : term.coeff) {
      coeff.push_back({format_rational(c.re()), format_rational(c.im())});
    }
    terms.push_back({{"exp", std::to_string(term.exponent)}, {"coeff", std::move(coeff)}});
  }
  json out = {{"ambient_dim", std::to_string(b.ambient_dim())},
              {"truncation_order", std::to_string(b.truncation_order())},
              {"terms", std::move(terms)}};
  return out.dump();
}

Branch branch_from_json(std::string_view text) {
  const json j = parse(text);
  const int n = read_small(field(j, "ambient_dim"), "ambient_dim");
  const int trunc = read_small(field(j, "truncation_order"), "truncation_order");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw Error(ErrorKind::ParseError, "'terms' must be an array");
  std::vector<BranchTerm> parsed;
  for (const auto& t : terms) {
    BranchTerm term;
    term.exponent = read_small(field(t, "exp"), "exp");
    const json& coeff = field(t, "coeff");
    if (!coeff.is_array()) throw Error(ErrorKind::ParseError, "'coeff' must be an array");
    for (const auto& c : coeff) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::ParseError, "each coefficient is a [re, im] pair");
      term.coeff.emplace_back(read_rational(c[0]), read_rational(c[1]));
    }
    parsed.push_back(std::move(term));
  }
  return Branch(n, trunc, std::move(parsed));
}

std::string cusp_type_to_json(const CuspType& p) {
  json out = {{"exponents", std::vector<int>(p.exponents().begin(), p.exponents().end())}};
  return out.dump();
}

CuspType cusp_type_from_json(std::string_view text) {
  const json j = parse(text);
  const json& e = field(j, "exponents");
  if (!e.is_array()) throw Error(ErrorKind::ParseError, "'exponents' must be an array");
  std::vector<int> exps;
  for (const auto& x : e) exps.push_back(read_small(x, "exponent"));
  return CuspType(std::move(exps));
}

}  // namespace pseudocurve
