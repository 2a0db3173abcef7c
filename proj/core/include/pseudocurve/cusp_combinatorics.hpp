#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pseudocurve {

/// Critical exponents p0 < p1 < ... < pl of a singular branch. The running gcd of
/// the prefix strictly drops at every step and ends at 1.
class CuspType {
 public:
  /// Throws Error(InvalidCuspType) unless validate_cusp_type(exponents).
  explicit CuspType(std::vector<int> exponents);

  std::span<const int> exponents() const { return exponents_; }
  /// Number of characteristic steps l (so exponents().size() == l + 1).
  int length() const { return static_cast<int>(exponents_.size()) - 1; }
  int first() const { return exponents_.front(); }
  int last() const { return exponents_.back(); }

  friend bool operator==(const CuspType&, const CuspType&) = default;
  friend auto operator<=>(const CuspType&, const CuspType&) = default;

 private:
  std::vector<int> exponents_;
};

struct AdmissibleExponentData {
  std::vector<int> exponents;
  std::vector<int> divisors;
  std::vector<bool> critical_mask;

  /// l' (exponents.size() - 1).
  int length() const { return static_cast<int>(exponents.size()) - 1; }
};

bool validate_cusp_type(std::span<const int> exponents);

/// d_i = gcd(p_0, ..., p_i).
std::vector<int> divisor_sequence(const CuspType& p);

/// All p_i + j d_i with 0 <= j <= floor((p_{i+1} - p_i) / d_i), plus p_l, ascending.
AdmissibleExponentData admissible_exponents(const CuspType& p);

/// sum_{i>=1} (d_{i-1} - d_i)(p_i - 1), evaluated literally. For a branch this is
/// twice the number of gaps of its value semigroup.
std::int64_t nodal_number_formula(const CuspType& p);

/// Working nodal number: nodal_number_formula / 2. The formula value is asserted even.
std::int64_t nodal_number(const CuspType& p);

/// Generators of the value semigroup of the monomial branch of type p.
std::vector<std::int64_t> semigroup_generators(const CuspType& p);

/// Gap count of the value semigroup, by direct sieve (independent of the formula).
std::int64_t nodal_number_oracle(const CuspType& p);

/// beta = 2 delta - 1.
std::int64_t bennequin_index(std::int64_t delta);

/// chi - 2 delta, invariant under smoothing a singular point.
std::int64_t smoothing_euler(std::int64_t chi, std::int64_t delta);

/// Real codimension 2 (n |k| - m) of the stratum of maps with m cusps of orders k_i.
std::int64_t cusp_stratum_codim(int n, std::span<const int> cusp_orders, int marked);

/// Real codimension 2 (n - 1) |l| of fixed secondary cusp indices inside a fixed-order stratum.
std::int64_t secondary_stratum_codim(int n, std::span<const int> secondary_indices);

/// Real codimension 2 (n - 1) sum_i (p_{i,last} - p_{i,0} - l'_i) of fixed cusp types.
std::int64_t cusp_type_stratum_codim(int n, std::span<const CuspType> types);

/// Every cusp type with last exponent <= max_exponent, in lexicographic order.
std::vector<CuspType> enumerate_cusp_types(int max_exponent);

/// Total nodal number of a reducible germ: branch nodal numbers plus pairwise intersection
/// multiplicities.
std::int64_t total_nodal_number(std::span<const std::int64_t> branch_deltas,
                                std::span<const std::int64_t> pairwise_intersections);

}  // namespace pseudocurve
