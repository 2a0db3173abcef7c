#include "pseudocurve/moduli_index.hpp"

#include "pseudocurve/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pseudocurve {

std::int64_t CurveData::total_genus() const { return std::accumulate(genera.begin(), genera.end(), std::int64_t{0}); }

void validate(const CurveData& c) {
  if (c.n < 2) throw Error(ErrorKind::DomainError, "complex dimension must be at least 2");
  if (c.genera.empty()) throw Error(ErrorKind::DomainError, "a curve needs at least one component");
  for (auto g : c.genera) {
    if (g < 0) throw Error(ErrorKind::DomainError, "component genus must be non-negative");
  }
  if (c.marked < 0) throw Error(ErrorKind::DomainError, "marked point count must be non-negative");
}

GenusUnknown parse_genus_unknown(std::string_view name) {
  if (name == "genus") return GenusUnknown::TotalGenus;
  if (name == "mu") return GenusUnknown::Mu;
  if (name == "self_int") return GenusUnknown::SelfIntersection;
  if (name == "delta") return GenusUnknown::Delta;
  if (name == "components") return GenusUnknown::Components;
  throw Error(ErrorKind::ParseError, "unknown genus-formula field '" + std::string(name) + "'");
}

bool genus_formula_check(const CurveData& c) {
  validate(c);
  // 2 sum g = [C]^2 - c1[C] + 2 d - 2 delta, kept integral.
  return 2 * c.total_genus() == c.self_int - c.mu + 2 * c.components() - 2 * c.delta;
}

namespace {

std::int64_t half_or_throw(std::int64_t twice, const char* what) {
  if (twice % 2 != 0) {
    throw Error(ErrorKind::GenusFormulaInconsistent, std::string(what) + " would be a half-integer");
  }
  return twice / 2;
}

std::int64_t non_negative_or_throw(std::int64_t value, const char* what) {
  if (value < 0) {
    throw Error(ErrorKind::GenusFormulaInconsistent,
                std::string(what) + " would be negative (" + std::to_string(value) + ")");
  }
  return value;
}

}  // namespace

std::int64_t genus_formula_solve(const CurveData& c, GenusUnknown unknown) {
  const std::int64_t d = c.components();
  const std::int64_t g = c.total_genus();
  switch (unknown) {
    case GenusUnknown::TotalGenus: {
      if (c.genera.empty()) throw Error(ErrorKind::DomainError, "a curve needs at least one component");
      const std::int64_t others = g - c.genera.back();
      const std::int64_t total = half_or_throw(c.self_int - c.mu, "genus") + d - c.delta;
      return non_negative_or_throw(total - others, "genus");
    }
    case GenusUnknown::Mu:
      return c.self_int - 2 * (g - d + c.delta);
    case GenusUnknown::SelfIntersection:
      return c.mu + 2 * (g - d + c.delta);
    case GenusUnknown::Delta:
      return non_negative_or_throw(half_or_throw(c.self_int - c.mu, "delta") + d - g, "delta");
    case GenusUnknown::Components: {
      // Components beyond the listed genera are taken to be rational.
      const std::int64_t count = g - half_or_throw(c.self_int - c.mu, "component count") + c.delta;
      if (count < std::max<std::int64_t>(d, 1)) {
        throw Error(ErrorKind::GenusFormulaInconsistent,
                    "component count " + std::to_string(count) + " is smaller than the listed genera");
      }
      return count;
    }
  }
  throw Error(ErrorKind::DomainError, "unhandled genus-formula unknown");
}

CurveData cp2_smooth_curve(int degree) {
  CurveData c;
  c.n = 2;
  c.mu = 3 * static_cast<std::int64_t>(degree);
  c.self_int = static_cast<std::int64_t>(degree) * degree;
  c.genera = {0};
  c.genera[0] = genus_formula_solve(c, GenusUnknown::TotalGenus);
  return c;
}

std::int64_t gromov_operator_index(std::int64_t mu, int n, int g) {
  return 2 * (mu + static_cast<std::int64_t>(n) * (1 - g));
}

std::int64_t d_cohomology_index(const BundleData& b) {
  if (b.rank < 1) throw Error(ErrorKind::DomainError, "bundle rank must be positive");
  return 2 * (b.c1 + static_cast<std::int64_t>(b.rank) * (1 - b.genus));
}

VanishingFlags vanishing_predicate(const BundleData& b) {
  if (b.rank != 1) throw Error(ErrorKind::LineBundleOnly, "vanishing criteria hold for line bundles only");
  return {b.c1 < 0, b.c1 > 2 * static_cast<std::int64_t>(b.genus) - 2};
}

std::int64_t moduli_projection_index(std::int64_t mu, int n, int g) {
  return 2 * (mu + static_cast<std::int64_t>(n - 3) * (1 - g));
}

std::int64_t marked_moduli_index(std::int64_t mu, int n, int g, std::int64_t m) {
  if (m < 0) throw Error(ErrorKind::DomainError, "marked point count must be non-negative");
  return 2 * (mu + static_cast<std::int64_t>(n - 3) * (1 - g) - m);
}

H0Result h0_from_h1(std::int64_t mu, int n, int g, std::int64_t k_total, std::int64_t h1) {
  if (h1 < 0) throw Error(ErrorKind::DomainError, "h1 must be non-negative");
  return {h1 + 2 * (mu + static_cast<std::int64_t>(g - 1) * (3 - n) - k_total)};
}

std::int64_t h1_stratum_codim(std::int64_t h0, std::int64_t h1) {
  if (h0 < 0 || h1 < 0) throw Error(ErrorKind::DomainError, "h0 and h1 must be non-negative");
  return h0 * h1;
}

CuspCountBounds cusp_count_bounds(std::int64_t mu, int g, std::int64_t m) { return {mu - m, mu - m + g - 1}; }

int teichmueller_dim(int g) {
  if (g < 0) throw Error(ErrorKind::DomainError, "genus must be non-negative");
  if (g == 0) return 0;
  if (g == 1) return 1;
  return 3 * g - 3;
}

namespace {

std::int64_t point_capacity(int degree) { return static_cast<std::int64_t>(degree) * (degree + 3) / 2; }

void consider(const std::vector<ComponentSplit>& split, Cp2Obstruction& best, bool& found) {
  std::int64_t count = 0;
  for (const auto& part : split) count += point_capacity(part.degree);
  if (!found || count > best.worst_count) {
    best.worst_count = count;
    best.worst_split = split;
    found = true;
  }
}

/// Multisets of (degree, multiplicity) pairs, generated in non-increasing order.
void enumerate_splittings(int remaining, ComponentSplit bound, std::vector<ComponentSplit>& prefix,
                          Cp2Obstruction& best, bool& found) {
  if (remaining == 0) {
    const bool has_multiple = std::any_of(prefix.begin(), prefix.end(),
                                          [](const ComponentSplit& s) { return s.multiplicity >= 2; });
    if (has_multiple) consider(prefix, best, found);
    return;
  }
  for (int degree = std::min(remaining, bound.degree); degree >= 1; --degree) {
    const int max_mult = degree == bound.degree ? bound.multiplicity : remaining / degree;
    for (int mult = std::min(max_mult, remaining / degree); mult >= 1; --mult) {
      prefix.push_back({degree, mult});
      enumerate_splittings(remaining - degree * mult, {degree, mult}, prefix, best, found);
      prefix.pop_back();
    }
  }
}

}  // namespace

Cp2Obstruction cp2_multiple_component_obstruction(int degree, bool all_splittings) {
  if (degree < 1) throw Error(ErrorKind::DomainError, "degree must be positive");
  Cp2Obstruction out;
  out.required = 3 * static_cast<std::int64_t>(degree) - 1;
  bool found = false;
  if (all_splittings) {
    std::vector<ComponentSplit> prefix;
    enumerate_splittings(degree, {degree, degree}, prefix, out, found);
  } else {
    for (int d2 = 1; 2 * d2 <= degree; ++d2) {
      const int d1 = degree - 2 * d2;
      std::vector<ComponentSplit> split;
      if (d1 > 0) split.push_back({d1, 1});
      split.push_back({d2, 2});
      consider(split, out, found);
    }
  }
  out.obstructed = out.worst_count < out.required;
  return out;
}

std::int64_t cp2_rational_rigidity_index(int degree) {
  return marked_moduli_index(3 * static_cast<std::int64_t>(degree), 2, 0, 3 * static_cast<std::int64_t>(degree) - 1);
}

}  // namespace pseudocurve
