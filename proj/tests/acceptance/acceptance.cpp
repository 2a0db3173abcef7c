// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include "pseudocurve/branch_model.hpp"
#include "pseudocurve/cusp_combinatorics.hpp"
#include "pseudocurve/error.hpp"
#include "pseudocurve/moduli_index.hpp"
#include "pseudocurve/node_geometry.hpp"
#include "pseudocurve/saddle_residue.hpp"

#include "random.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

namespace {

using namespace pseudocurve;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    r.ok = false;
    r.detail += " (over time limit)";
  }
  if (!r.ok) ++failures;
  std::printf("%s %d %s: %s [%.3f s]\n", r.ok ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs);
}

Outcome saddle_sweep() {
  testing::SplitMix rng(0);
  int cases = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int l = 0; l < k; ++l) {
      for (int c = 0; c < 50; ++c) {
        std::vector<GaussianRational> p;
        for (int j = 0; j < k - l; ++j) {
          p.emplace_back(Rational(rng.range(-9, 9), rng.range(1, 9)), Rational(rng.range(-9, 9), rng.range(1, 9)));
        }
        while (p.front().is_zero()) p.front() = GaussianRational(Rational(rng.range(-9, 9)), Rational(rng.range(-9, 9)));
        const auto r = inertia(ResidueForm(k, l, Polynomial(p)));
        ++cases;
        if (r.ind_plus != k - l || r.ind_minus != k - l) {
          std::ostringstream os;
          os << "k=" << k << " l=" << l << " got (" << r.ind_plus << ", " << r.ind_minus << ")";
          return {false, os.str()};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " forms, inertia (k-l, k-l)"};
}

Outcome delta_oracle() {
  const auto types = enumerate_cusp_types(30);
  for (const auto& p : types) {
    if (nodal_number_formula(p) != 2 * nodal_number_oracle(p)) return {false, "mismatch at p0=" + std::to_string(p.first())};
  }
  return {true, std::to_string(types.size()) + " cusp types, formula = 2 x gaps"};
}

Outcome cp2_anchor() {
  const auto six = cp2_multiple_component_obstruction(6);
  bool ok = six.obstructed && six.worst_count == 16 && six.required == 17;
  for (int d = 1; d <= 6; ++d) ok = ok && cp2_multiple_component_obstruction(d).obstructed;
  const auto seven = cp2_multiple_component_obstruction(7);
  ok = ok && !seven.obstructed;
  return {ok, "d=6: " + std::to_string(six.worst_count) + " vs " + std::to_string(six.required) +
                  "; d=7: " + std::to_string(seven.worst_count) + " vs " + std::to_string(seven.required)};
}

Outcome genus_anchor() {
  for (int d = 1; d <= 10; ++d) {
    const auto c = cp2_smooth_curve(d);
    if (c.genera[0] != static_cast<std::int64_t>(d - 1) * (d - 2) / 2) return {false, "d=" + std::to_string(d)};
  }
  return {true, "g = (d-1)(d-2)/2 for d = 1..10"};
}

Outcome index_consistency() {
  testing::SplitMix rng(0);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t mu = rng.range(-50, 200);
    const int n = rng.range(2, 12);
    const int g = rng.range(0, 20);
    if (marked_moduli_index(mu, n, g, 0) != moduli_projection_index(mu, n, g)) return {false, "case " + std::to_string(i)};
  }
  for (int d = 1; d <= 10; ++d) {
    if (cp2_rational_rigidity_index(d) != 0) return {false, "rigidity d=" + std::to_string(d)};
  }
  return {true, "10000 random cases, rigidity 0 for d = 1..10"};
}

Outcome cosh_constants() {
  const Cylinder dom{0.0, 10.0};
  double worst = 0.0;
  for (int m : {1, 2}) {
    const CylinderMap u({{m, {{1.0, 0.0}}}}, dom);
    for (int k = 1; k <= 8; ++k) worst = std::max(worst, std::abs(three_band_ratio(u, k) - 1.0 / std::cosh(2.0 * m)));
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  return {worst <= 1e-12, os.str()};
}

Outcome volume_identity_check() {
  double worst = 0.0;
  for (double mod : {0.5, 0.1, 0.01}) worst = std::max(worst, volume_identity({mod, 0.0}, 200).max_residual);
  std::ostringstream os;
  os << "max residual " << worst << " against (1 - |lambda|^2)/2";
  return {worst < 1e-10, os.str()};
}

Outcome gluing_maps() {
  double inverse = 0.0;
  double endpoint = 0.0;
  for (double mod : {0.5, 0.1, 0.01}) {
    const Complex lambda(mod, 0.0);
    for (int i = 0; i < 1000; ++i) {
      const double rho = -1.0 + 2.0 * i / 999.0;
      inverse = std::max(inverse, std::abs(rho_of_r(r_of_rho(rho, lambda), lambda) - rho));
    }
    endpoint = std::max({endpoint, std::abs(r_of_rho(-1.0, lambda) - mod), std::abs(r_of_rho(0.0, lambda) - std::sqrt(mod)),
                         std::abs(r_of_rho(1.0, lambda) - 1.0)});
  }
  std::ostringstream os;
  os << "inverse " << inverse << ", endpoints " << endpoint;
  return {inverse < 1e-12 && endpoint <= 1e-14, os.str()};
}

Outcome decay_property() {
  testing::SplitMix rng(0);
  const double gamma2 = 1.0 / std::cosh(4.0);
  double worst_c = 0.0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::vector<LaurentMode> modes;
    const int count = rng.range(1, 4);
    for (int j = 0; j < count; ++j) {
      LaurentMode mode{rng.range(-5, 5), {}};
      for (int c = 0; c < 2; ++c) mode.v.emplace_back(rng.real(-1.0, 1.0), rng.real(-1.0, 1.0));
      modes.push_back(std::move(mode));
    }
    const CylinderMap u(std::move(modes), {0.0, 10.0});
    const auto report = decay_estimate_check(u, 10);
    if (!report.pass || !std::isfinite(report.c_fit)) return {false, "case " + std::to_string(i)};
    worst_c = std::max(worst_c, report.c_fit);
    const auto high = u.filtered([](int m) { return std::abs(m) >= 2; });
    if (band_energy(high, Cylinder{0.0, 10.0}) == 0.0) continue;
    for (int k = 1; k <= 8; ++k) worst_ratio = std::max(worst_ratio, three_band_ratio(high, k));
  }
  std::ostringstream os;
  os << "max C " << worst_c << ", max |m|>=2 ratio " << worst_ratio;
  return {worst_ratio <= gamma2 + 1e-12, os.str()};
}

Outcome branch_round_trip() {
  int count = 0;
  for (const auto& p : enumerate_cusp_types(30)) {
    const Branch b = branch_from_cusp_type(p);
    if (!(cusp_type_of_branch(b) == p)) return {false, "round trip at p0=" + std::to_string(p.first())};
    ++count;
    if (p.first() < 2) continue;
    const auto jet = jet_normal_form(b);
    if (jet.p1.coeff(0).is_zero() || jet.p2.is_zero() != (jet.l == jet.k)) return {false, "jet constraint"};
  }
  return {true, std::to_string(count) + " types round-tripped, jet constraints hold"};
}

}  // namespace

int main() {
  criterion(1, "saddle-index sweep", 10.0, saddle_sweep);
  criterion(2, "delta oracle equivalence", 30.0, delta_oracle);
  criterion(3, "CP2 feasibility anchor", 0.0, cp2_anchor);
  criterion(4, "genus formula anchor", 0.0, genus_anchor);
  criterion(5, "index consistency", 0.0, index_consistency);
  criterion(6, "cosh constants", 1.0, cosh_constants);
  criterion(7, "volume identity", 5.0, volume_identity_check);
  criterion(8, "gluing maps", 0.0, gluing_maps);
  criterion(9, "decay property", 0.0, decay_property);
  criterion(10, "branch round trip", 0.0, branch_round_trip);
  return failures == 0 ? 0 : 1;
}
