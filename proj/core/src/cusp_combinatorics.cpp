#include "pseudocurve/cusp_combinatorics.hpp"

#include "pseudocurve/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pseudocurve {

namespace {

std::string describe(std::span<const int> exponents) {
  std::string out = "[";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exponents[i]);
  }
  return out + "]";
}

}  // namespace

bool validate_cusp_type(std::span<const int> exponents) {
  if (exponents.empty() || exponents.front() < 1) return false;
  int d = exponents.front();
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i] <= exponents[i - 1]) return false;
    const int next = std::gcd(d, exponents[i]);
    if (next >= d) return false;
    d = next;
  }
  return d == 1;
}

CuspType::CuspType(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (!validate_cusp_type(exponents_)) {
    throw Error(ErrorKind::InvalidCuspType, describe(exponents_) + " is not a cusp type");
  }
}

std::vector<int> divisor_sequence(const CuspType& p) {
  std::vector<int> d;
  d.reserve(p.exponents().size());
  int g = 0;
  for (int e : p.exponents()) {
    g = std::gcd(g, e);
    d.push_back(g);
  }
  return d;
}

AdmissibleExponentData admissible_exponents(const CuspType& p) {
  const auto exps = p.exponents();
  const auto d = divisor_sequence(p);
  AdmissibleExponentData out;
  for (std::size_t i = 0; i + 1 < exps.size(); ++i) {
    const int steps = (exps[i + 1] - exps[i]) / d[i];
    for (int j = 0; j <= steps; ++j) out.exponents.push_back(exps[i] + j * d[i]);
  }
  out.exponents.push_back(exps.back());

  int g = 0;
  for (std::size_t j = 0; j < out.exponents.size(); ++j) {
    const int next = std::gcd(g, out.exponents[j]);
    out.critical_mask.push_back(j == 0 || next < g);
    out.divisors.push_back(next);
    g = next;
  }
  return out;
}

std::int64_t nodal_number_formula(const CuspType& p) {
  const auto exps = p.exponents();
  const auto d = divisor_sequence(p);
  std::int64_t sum = 0;
  for (std::size_t i = 1; i < exps.size(); ++i) {
    sum += static_cast<std::int64_t>(d[i - 1] - d[i]) * (exps[i] - 1);
  }
  return sum;
}

std::int64_t nodal_number(const CuspType& p) {
  const std::int64_t twice = nodal_number_formula(p);
  if (twice % 2 != 0) {
    throw Error(ErrorKind::InvalidCuspType, "odd nodal formula value for " + describe(p.exponents()));
  }
  return twice / 2;
}

std::vector<std::int64_t> semigroup_generators(const CuspType& p) {
  const auto exps = p.exponents();
  const auto d = divisor_sequence(p);
  std::vector<std::int64_t> gens{exps[0]};
  if (exps.size() > 1) gens.push_back(exps[1]);
  for (std::size_t i = 1; i + 1 < exps.size(); ++i) {
    gens.push_back(static_cast<std::int64_t>(d[i - 1] / d[i]) * gens[i] + exps[i + 1] - exps[i]);
  }
  return gens;
}

std::int64_t nodal_number_oracle(const CuspType& p) {
  const auto gens = semigroup_generators(p);
  const std::int64_t smallest = *std::min_element(gens.begin(), gens.end());
  // Once `smallest` consecutive integers are members, every larger integer is one too.
  std::vector<bool> member{true};
  std::int64_t run = 1;
  std::int64_t gaps = 0;
  for (std::int64_t x = 1; run < smallest; ++x) {
    bool in = false;
    for (auto g : gens) {
      if (x >= g && member[static_cast<std::size_t>(x - g)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      ++gaps;
    }
  }
  return gaps;
}

std::int64_t bennequin_index(std::int64_t delta) { return 2 * delta - 1; }

std::int64_t smoothing_euler(std::int64_t chi, std::int64_t delta) { return chi - 2 * delta; }

std::int64_t cusp_stratum_codim(int n, std::span<const int> cusp_orders, int marked) {
  if (static_cast<std::size_t>(marked) != cusp_orders.size()) {
    throw Error(ErrorKind::DomainError, "marked point count must equal the number of cusp orders");
  }
  std::int64_t total = 0;
  for (int k : cusp_orders) {
    if (k < 1) throw Error(ErrorKind::DomainError, "cusp orders must be positive");
    total += k;
  }
  return 2 * (n * total - marked);
}

std::int64_t secondary_stratum_codim(int n, std::span<const int> secondary_indices) {
  std::int64_t total = 0;
  for (int l : secondary_indices) total += l;
  return 2 * static_cast<std::int64_t>(n - 1) * total;
}

std::int64_t cusp_type_stratum_codim(int n, std::span<const CuspType> types) {
  std::int64_t total = 0;
  for (const auto& p : types) {
    total += p.last() - p.first() - admissible_exponents(p).length();
  }
  return 2 * static_cast<std::int64_t>(n - 1) * total;
}

std::vector<CuspType> enumerate_cusp_types(int max_exponent) {
  std::vector<CuspType> out;
  std::vector<int> prefix;
  auto extend = [&](auto&& self, int d) -> void {
    if (d == 1) {
      out.emplace_back(prefix);
      return;
    }
    for (int q = prefix.back() + 1; q <= max_exponent; ++q) {
      const int next = std::gcd(d, q);
      if (next == d) continue;
      prefix.push_back(q);
      self(self, next);
      prefix.pop_back();
    }
  };
  for (int p0 = 1; p0 <= max_exponent; ++p0) {
    prefix.assign(1, p0);
    extend(extend, p0);
  }
  return out;
}

std::int64_t total_nodal_number(std::span<const std::int64_t> branch_deltas,
                                std::span<const std::int64_t> pairwise_intersections) {
  return std::accumulate(branch_deltas.begin(), branch_deltas.end(), std::int64_t{0}) +
         std::accumulate(pairwise_intersections.begin(), pairwise_intersections.end(), std::int64_t{0});
}

}  // namespace pseudocurve
