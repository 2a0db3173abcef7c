#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace pseudocurve {

/// Homological record of a curve C in an almost complex manifold of complex dimension n.
struct CurveData {
  int n = 2;
  std::int64_t mu = 0;        ///< c1(X) . [C]
  std::int64_t self_int = 0;  ///< [C]^2
  std::vector<std::int64_t> genera;  ///< one genus per component
  std::int64_t delta = 0;     ///< geometric self-intersection number
  std::int64_t marked = 0;

  std::int64_t components() const { return static_cast<std::int64_t>(genera.size()); }
  std::int64_t total_genus() const;
};

/// Throws Error(DomainError) when components != genera.size() style invariants fail
/// (no components, negative genus, negative marked count).
void validate(const CurveData& c);

struct BundleData {
  std::int64_t c1 = 0;
  int rank = 1;
  int genus = 0;
};

enum class GenusUnknown { TotalGenus, Mu, SelfIntersection, Delta, Components };

GenusUnknown parse_genus_unknown(std::string_view name);

/// sum g_j == ([C]^2 - c1[C]) / 2 + d - delta.
bool genus_formula_check(const CurveData& c);

/// The unique integer value of `unknown` that makes the genus formula hold; the current value of
/// that field is ignored. TotalGenus solves for the genus of the last component. Throws
/// Error(GenusFormulaInconsistent) when no integer (or no admissible) solution exists.
std::int64_t genus_formula_solve(const CurveData& c, GenusUnknown unknown);

/// Smooth plane curve of degree d: [C]^2 = d^2, c1[C] = 3d, one component, delta = 0.
CurveData cp2_smooth_curve(int degree);

/// Real index 2 (mu + n (1 - g)) of the linearized Cauchy-Riemann operator.
std::int64_t gromov_operator_index(std::int64_t mu, int n, int g);

/// Real index 2 (c1(E) + rank (1 - g)) of a Cauchy-Riemann type operator on a bundle E.
std::int64_t d_cohomology_index(const BundleData& b);

struct VanishingFlags {
  bool h0_zero = false;
  bool h1_zero = false;
  friend bool operator==(const VanishingFlags&, const VanishingFlags&) = default;
};

/// For a line bundle: H^0 vanishes if c1 < 0, H^1 vanishes if c1 > 2g - 2. Rank != 1 throws
/// Error(LineBundleOnly).
VanishingFlags vanishing_predicate(const BundleData& b);

/// Real index 2 (mu + (n - 3)(1 - g)) of the projection of the universal moduli space.
std::int64_t moduli_projection_index(std::int64_t mu, int n, int g);

/// Real index 2 (mu + (n - 3)(1 - g) - m) with m marked points fixed.
std::int64_t marked_moduli_index(std::int64_t mu, int n, int g, std::int64_t m);

/// h0 = h1 + 2 (mu + (g - 1)(3 - n) - |k|). A negative value means the stratum is empty.
struct H0Result {
  std::int64_t h0 = 0;
  bool stratum_empty() const { return h0 < 0; }
};
H0Result h0_from_h1(std::int64_t mu, int n, int g, std::int64_t k_total, std::int64_t h1);

/// Codimension h0 * h1 of the stratum with fixed h1.
std::int64_t h1_stratum_codim(std::int64_t h0, std::int64_t h1);

/// Bounds mu - m <= kappa <= mu - m + g - 1 on the number of cusps of a critical curve;
/// lower > upper means no critical point can occur.
struct CuspCountBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool feasible() const { return lower <= upper; }
  friend bool operator==(const CuspCountBounds&, const CuspCountBounds&) = default;
};
CuspCountBounds cusp_count_bounds(std::int64_t mu, int g, std::int64_t m);

/// Complex dimension of the Teichmueller space of genus g: 0, 1, 3g - 3.
int teichmueller_dim(int g);

struct ComponentSplit {
  int degree = 0;
  int multiplicity = 1;
  friend bool operator==(const ComponentSplit&, const ComponentSplit&) = default;
};

struct Cp2Obstruction {
  bool obstructed = false;
  std::int64_t worst_count = 0;
  std::int64_t required = 0;
  /// A splitting realizing worst_count (empty when no splitting exists).
  std::vector<ComponentSplit> worst_split;
};

/// Compares 3d - 1 generic points with the most points a limit with a multiple component can pass
/// through, sum_i d_i (d_i + 3) / 2 over its distinct components. By default only splittings
/// d = d1 + 2 d2 (one simple, one double component) are considered; `all_splittings` enumerates every
/// multiplicity vector with some multiplicity >= 2.
Cp2Obstruction cp2_multiple_component_obstruction(int degree, bool all_splittings = false);

/// Rational curves of degree d through 3d - 1 points: the marked index is zero.
std::int64_t cp2_rational_rigidity_index(int degree);

}  // namespace pseudocurve
