#include "pseudocurve/cli/verify.hpp"

#include "pseudocurve/branch_model.hpp"
#include "pseudocurve/cusp_combinatorics.hpp"
#include "pseudocurve/error.hpp"
#include "pseudocurve/moduli_index.hpp"
#include "pseudocurve/node_geometry.hpp"
#include "pseudocurve/saddle_residue.hpp"

#include "rng.hpp"

#include <boost/version.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pseudocurve::cli {

namespace {

using Suite = std::function<void(VerificationCertificate&, Rng&, int)>;

struct Recorder {
  VerificationCertificate& cert;
  void check(bool ok, std::string input, std::string expected, std::string got, std::string anchor) {
    ++cert.cases_run;
    if (!ok) cert.failures.push_back({std::move(input), std::move(expected), std::move(got), std::move(anchor)});
  }
};

std::string str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string poly_string(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ",";
    out += format_gaussian(p.coeffs()[i]);
  }
  return out;
}

std::string list_string(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

GaussianRational random_gaussian(Rng& rng, bool allow_imag) {
  const Rational re(rng.uniform(-9, 9), rng.uniform(1, 9));
  const Rational im = allow_imag && rng.uniform(0, 3) == 0 ? Rational(rng.uniform(-9, 9), rng.uniform(1, 9)) : Rational(0);
  return {re, im};
}

int pick(int cases, int fallback) { return cases > 0 ? cases : fallback; }

void saddle_suite(VerificationCertificate& cert, Rng& rng, int cases) {
  Recorder rec{cert};
  const int per_point = pick(cases, 50);
  for (int k = 1; k <= 6; ++k) {
    for (int l = 0; l < k; ++l) {
      for (int c = 0; c < per_point; ++c) {
        std::vector<GaussianRational> coeffs;
        for (int j = 0; j <= k - l - 1; ++j) coeffs.push_back(random_gaussian(rng, true));
        while (coeffs.front().is_zero()) coeffs.front() = random_gaussian(rng, true);
        const ResidueForm f(k, l, Polynomial(coeffs));
        const auto got = inertia(f);
        const int r = k - l;
        const InertiaResult want{r, r, 2 * (k + 1) - 2 * r, r};
        const std::string input = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " P=" + poly_string(f.p());
        auto show = [](const InertiaResult& x) {
          return "(" + std::to_string(x.ind_plus) + "," + std::to_string(x.ind_minus) + "," +
                 std::to_string(x.nullity) + ")";
        };
        rec.check(got == want, input, show(want), show(got), "residue form inertia equals (k-l, k-l)");
        rec.check(a0_equivalence_check(f), input, "true", "false", "residue form equivalent to its a0 reduction");
        rec.check(floating_inertia_consistent(f, got), input, "consistent", "inconsistent",
                  "floating eigenvalue inertia cross-check");
      }
    }
  }
}

void delta_suite(VerificationCertificate& cert, Rng&, int) {
  Recorder rec{cert};
  for (const auto& p : enumerate_cusp_types(30)) {
    const auto formula = nodal_number_formula(p);
    const auto gaps = nodal_number_oracle(p);
    const std::string input = "[" + list_string(p.exponents()) + "]";
    rec.check(formula == 2 * gaps, input, std::to_string(2 * gaps), std::to_string(formula),
              "characteristic-exponent delta sum equals twice the semigroup gap count");
    if (p.length() == 1) {
      const std::int64_t a = p.exponents()[0];
      const std::int64_t b = p.exponents()[1];
      rec.check(gaps == (a - 1) * (b - 1) / 2, input, std::to_string((a - 1) * (b - 1) / 2), std::to_string(gaps),
                "two-generator semigroup gap count (a-1)(b-1)/2");
    }
  }
}

void cp2_suite(VerificationCertificate& cert, Rng&, int) {
  Recorder rec{cert};
  for (int d = 1; d <= 12; ++d) {
    const auto ob = cp2_multiple_component_obstruction(d);
    const bool want = d <= 6;
    rec.check(ob.obstructed == want, "d=" + std::to_string(d), want ? "obstructed" : "not obstructed",
              ob.obstructed ? "obstructed" : "not obstructed", "multiple-component limit point count versus 3d-1");
  }
  const auto six = cp2_multiple_component_obstruction(6);
  rec.check(six.worst_count == 16 && six.required == 17, "d=6 counts", "16 vs 17",
            std::to_string(six.worst_count) + " vs " + std::to_string(six.required),
            "degree six double-conic count 14 + 2 = 16 below 17");
}

void genus_suite(VerificationCertificate& cert, Rng& rng, int cases) {
  Recorder rec{cert};
  for (int d = 1; d <= 10; ++d) {
    const auto c = cp2_smooth_curve(d);
    const std::int64_t want = static_cast<std::int64_t>(d - 1) * (d - 2) / 2;
    rec.check(c.genera.front() == want, "smooth degree " + std::to_string(d), std::to_string(want),
              std::to_string(c.genera.front()), "plane curve genus (d-1)(d-2)/2");
  }
  const int n = pick(cases, 500);
  for (int i = 0; i < n; ++i) {
    CurveData c;
    c.n = rng.uniform(2, 5);
    const int comps = rng.uniform(1, 4);
    for (int j = 0; j < comps; ++j) c.genera.push_back(rng.uniform(0, 6));
    c.delta = rng.uniform(0, 12);
    c.mu = rng.uniform(-20, 40);
    c.self_int = genus_formula_solve(c, GenusUnknown::SelfIntersection);
    std::ostringstream in;
    in << "mu=" << c.mu << " S=" << c.self_int << " delta=" << c.delta << " genera=";
    for (auto g : c.genera) in << g << ",";
    rec.check(genus_formula_check(c), in.str(), "consistent", "inconsistent", "adjunction genus formula");
    rec.check(genus_formula_solve(c, GenusUnknown::Mu) == c.mu, in.str(), std::to_string(c.mu),
              std::to_string(genus_formula_solve(c, GenusUnknown::Mu)), "adjunction genus formula solved for c1");
    rec.check(genus_formula_solve(c, GenusUnknown::Delta) == c.delta, in.str(), std::to_string(c.delta),
              std::to_string(genus_formula_solve(c, GenusUnknown::Delta)), "adjunction genus formula solved for delta");
    rec.check(genus_formula_solve(c, GenusUnknown::TotalGenus) == c.genera.back(), in.str(),
              std::to_string(c.genera.back()), std::to_string(genus_formula_solve(c, GenusUnknown::TotalGenus)),
              "adjunction genus formula solved for a genus");
  }
}

void index_suite(VerificationCertificate& cert, Rng& rng, int cases) {
  Recorder rec{cert};
  const int n = pick(cases, 10000);
  for (int i = 0; i < n; ++i) {
    const std::int64_t mu = rng.uniform(-1000, 1000);
    const int dim = rng.uniform(2, 10);
    const int g = rng.uniform(0, 50);
    const auto a = marked_moduli_index(mu, dim, g, 0);
    const auto b = moduli_projection_index(mu, dim, g);
    rec.check(a == b, "mu=" + std::to_string(mu) + " n=" + std::to_string(dim) + " g=" + std::to_string(g),
              std::to_string(b), std::to_string(a), "marked moduli index with no marked points");
  }
  for (int d = 1; d <= 10; ++d) {
    const auto idx = cp2_rational_rigidity_index(d);
    rec.check(idx == 0, "rational degree " + std::to_string(d), "0", std::to_string(idx),
              "rational plane curves through 3d-1 points are rigid");
  }
}

void cosh_suite(VerificationCertificate& cert, Rng&, int) {
  Recorder rec{cert};
  for (int m = 1; m <= 5; ++m) {
    const CylinderMap u({{m, {Complex(1.0, 0.0)}}}, {0.0, 10.0});
    for (int k = 1; k <= 7; ++k) {
      const double got = three_band_ratio(u, k);
      const double want = 1.0 / std::cosh(2.0 * m);
      rec.check(std::abs(got - want) <= 1e-12, "m=" + std::to_string(m) + " k=" + std::to_string(k), str(want),
                str(got), "single-mode three-band ratio 1/cosh(2m)");
    }
  }
}

void volume_suite(VerificationCertificate& cert, Rng&, int) {
  Recorder rec{cert};
  for (double mod : {0.5, 0.1, 0.01}) {
    for (int phase = 0; phase < 4; ++phase) {
      const Complex lambda = std::polar(mod, 0.5 * phase);
      const auto r = volume_identity(lambda, 200);
      const std::string input = "|lambda|=" + str(mod) + " arg=" + str(0.5 * phase);
      rec.check(r.max_residual < 1e-10, input, "< 1e-10", str(r.max_residual),
                "hyperbola area form pulls back to (1-|lambda|^2)/2 drho dtheta");
      rec.check(std::abs(r.pulled_back_area - r.annulus_area) < 1e-9 * r.annulus_area, input, str(r.annulus_area),
                str(r.pulled_back_area), "total hyperbola area 2 pi (1-|lambda|^2)");
    }
  }
  const double lim = volume_identity_limit_residual(200);
  rec.check(lim < 1e-10, "lambda=0", "< 1e-10", str(lim), "limit identity with R0 = sqrt(rho)");
}

void gluing_suite(VerificationCertificate& cert, Rng&, int) {
  Recorder rec{cert};
  for (int s = 0; s <= 20; ++s) {
    const double mod = 0.01 + (0.5 - 0.01) * s / 20.0;
    const Complex lambda(mod, 0.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double rho = -1.0 + 2.0 * i / 999.0;
      worst = std::max(worst, std::abs(rho_of_r(r_of_rho(rho, lambda), lambda) - rho));
    }
    const std::string input = "|lambda|=" + str(mod);
    rec.check(worst < 1e-12, input, "< 1e-12", str(worst), "rho and R are mutually inverse");
    const double e1 = std::abs(r_of_rho(-1.0, lambda) - mod);
    const double e2 = std::abs(r_of_rho(0.0, lambda) - std::sqrt(mod));
    const double e3 = std::abs(r_of_rho(1.0, lambda) - 1.0);
    const double e = std::max({e1, e2, e3});
    rec.check(e <= 1e-14, input + " endpoints", "<= 1e-14", str(e), "R(-1) = |lambda|, R(0) = sqrt|lambda|, R(1) = 1");
  }
}

CylinderMap random_map(Rng& rng, double length, std::string& desc) {
  std::vector<LaurentMode> modes;
  const int count = rng.uniform(1, 4);
  std::ostringstream os;
  for (int i = 0; i < count; ++i) {
    LaurentMode mode{rng.uniform(-5, 5), {}};
    for (int j = 0; j < 2; ++j) mode.v.emplace_back(rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0));
    os << mode.m << ";";
    modes.push_back(std::move(mode));
  }
  desc = os.str();
  return CylinderMap(std::move(modes), {0.0, length});
}

void decay_suite(VerificationCertificate& cert, Rng& rng, int cases) {
  Recorder rec{cert};
  const int n = pick(cases, 100);
  const double gamma2 = 1.0 / std::cosh(4.0);
  for (int i = 0; i < n; ++i) {
    std::string desc;
    const auto u = random_map(rng, 10.0, desc);
    const std::string input = "case " + std::to_string(i) + " modes " + desc;
    const auto report = decay_estimate_check(u, 10);
    rec.check(report.pass && std::isfinite(report.c_fit), input, "finite C", str(report.c_fit),
              "uniform two-sided exponential band decay");
    const auto high = u.filtered([](int m) { return std::abs(m) >= 2; });
    if (band_energy(high, Cylinder{0.0, 10.0}) == 0.0) continue;
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) worst = std::max(worst, three_band_ratio(high, k));
    rec.check(worst <= gamma2 + 1e-12, input, "<= 1/cosh 4", str(worst), "three-band ratio of modes |m| >= 2");
    double rem = 0.0;
    for (int k = 1; k <= 8; ++k) rem = std::max(rem, remainder_band_ratio(u, k));
    rec.check(rem <= gamma2 + 1e-12, input, "<= 1/cosh 4", str(rem), "remainder after three-term truncation");
  }
}

void branch_suite(VerificationCertificate& cert, Rng&, int) {
  Recorder rec{cert};
  for (const auto& p : enumerate_cusp_types(30)) {
    const std::string input = "[" + list_string(p.exponents()) + "]";
    const Branch b = branch_from_cusp_type(p);
    std::string got;
    bool ok = false;
    try {
      const auto q = cusp_type_of_branch(b);
      got = "[" + list_string(q.exponents()) + "]";
      ok = q == p;
    } catch (const Error& e) {
      got = e.what();
    }
    rec.check(ok, input, input, got, "cusp type round trip through the monomial model");
    if (p.first() < 2) continue;
    const auto jet = jet_normal_form(b);
    const bool p1_ok = !jet.p1.coeff(0).is_zero();
    const bool p2_ok = jet.p2.is_zero() == (jet.l == jet.k);
    rec.check(p1_ok && p2_ok && jet.k == p.first() - 1 && jet.l >= 0 && jet.l <= jet.k, input,
              "P1(0) != 0, P2 = 0 iff l = k", "k=" + std::to_string(jet.k) + " l=" + std::to_string(jet.l),
              "jet normal form constraints");
  }
}

Branch plane_branch(const Polynomial& x, const Polynomial& y, int trunc) {
  const Polynomial coords[] = {x, y};
  return Branch::from_coordinates(coords, trunc);
}

void intersection_suite(VerificationCertificate& cert, Rng& rng, int cases) {
  Recorder rec{cert};
  const int n = pick(cases, 200);
  for (int i = 0; i < n; ++i) {
    int a1 = rng.uniform(1, 6);
    int b1 = rng.uniform(a1 + 1, 9);
    int a2 = rng.uniform(1, 6);
    int b2 = rng.uniform(a2 + 1, 9);
    if (std::gcd(a1, b1) != 1 || std::gcd(a2, b2) != 1 || a1 * b2 == a2 * b1) continue;
    const Branch g1 = plane_branch(Polynomial::monomial(1, a1), Polynomial::monomial(1, b1), 40);
    const Branch g2 = plane_branch(Polynomial::monomial(1, a2), Polynomial::monomial(1, b2), 40);
    const int want = std::min(a1 * b2, a2 * b1);
    const std::string input = "(t^" + std::to_string(a1) + ",t^" + std::to_string(b1) + ") (t^" +
                              std::to_string(a2) + ",t^" + std::to_string(b2) + ")";
    std::string got;
    try {
      got = std::to_string(intersection_multiplicity(g1, g2));
    } catch (const Error& e) {
      got = e.what();
    }
    rec.check(got == std::to_string(want), input, std::to_string(want), got,
              "monomial branch intersection min(a1 b2, a2 b1)");
  }
  for (int i = 0; i < n; ++i) {
    // Graph y = f(x) against (t^p, g(t)): the multiplicity is ord_t (g(t) - f(t^p)).
    std::vector<GaussianRational> f{0};
    for (int j = 1; j <= 4; ++j) f.push_back(rng.uniform(0, 2) == 0 ? GaussianRational(0) : random_gaussian(rng, true));
    const int p = rng.uniform(1, 4);
    std::vector<GaussianRational> g(13);
    for (int j = p + 1; j <= 12; ++j) {
      if (rng.uniform(0, 2) == 0) g[static_cast<std::size_t>(j)] = random_gaussian(rng, true);
    }
    if (p > 1 && g[static_cast<std::size_t>(p + 1)].is_zero()) g[static_cast<std::size_t>(p + 1)] = 1;
    const Polynomial fx(f);
    const Polynomial gx(g);
    const Polynomial xp = Polynomial::monomial(1, static_cast<std::size_t>(p));
    const Polynomial diff = gx - fx.compose(xp);
    std::vector<int> exps{p};
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g[j].is_zero()) exps.push_back(static_cast<int>(j));
    }
    int common = 0;
    for (int e : exps) common = std::gcd(common, e);
    if (diff.is_zero() || common != 1 || !diff.order() || *diff.order() > 30) continue;
    const int want = *diff.order();
    const Branch smooth = plane_branch(Polynomial::monomial(1, 1), fx, 40);
    const Branch other = plane_branch(xp, gx, 40);
    const std::string input = "f=" + poly_string(fx) + " p=" + std::to_string(p) + " g=" + poly_string(gx);
    std::string got;
    try {
      got = std::to_string(intersection_multiplicity(smooth, other));
    } catch (const Error& e) {
      got = e.what();
    }
    rec.check(got == std::to_string(want), input, std::to_string(want), got,
              "graph substitution ord_t(g(t) - f(t^p))");
  }
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites = {
      {"branch", branch_suite}, {"cosh", cosh_suite},     {"cp2", cp2_suite},
      {"decay", decay_suite},   {"delta", delta_suite},   {"genus", genus_suite},
      {"gluing", gluing_suite}, {"index", index_suite},   {"intersection", intersection_suite},
      {"saddle", saddle_suite}, {"volume", volume_suite},
  };
  return suites;
}

int job_count(int requested) {
  if (requested > 0) return requested;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("PSEUDOCURVE_JOBS")) {
    const int cap = std::atoi(env);
    if (cap > 0) jobs = std::min(jobs, cap);
  }
  return jobs;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, suite] : registry()) names.push_back(name);
  return names;
}

VerificationCertificate run_suite(const std::string& name, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  VerificationCertificate cert;
  cert.suite = name;
  Rng rng(stream_seed(options.seed, name));
  it->second(cert, rng, options.cases);
  std::stable_sort(cert.failures.begin(), cert.failures.end(),
                   [](const VerificationFailure& a, const VerificationFailure& b) {
                     return std::tie(a.input, a.anchor) < std::tie(b.input, b.anchor);
                   });
  return cert;
}

std::vector<VerificationCertificate> run_suites(const std::vector<std::string>& names, const VerifyOptions& options) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& name : sorted) {
    if (!registry().contains(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  }
  std::vector<VerificationCertificate> out(sorted.size());
  std::vector<std::exception_ptr> errors(sorted.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sorted.size(); i = next++) {
      try {
        out[i] = run_suite(sorted[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::min<int>(job_count(options.jobs), static_cast<int>(sorted.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string certificate_json(const std::vector<VerificationCertificate>& certs) {
  using nlohmann::ordered_json;
  auto failures_json = [](const VerificationCertificate& c, bool prefix) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : c.failures) {
      arr.push_back({{"input", prefix ? c.suite + ": " + f.input : f.input},
                     {"expected", f.expected},
                     {"got", f.got},
                     {"anchor", f.anchor}});
    }
    return arr;
  };
  ordered_json versions = {{"pseudocurve", "0.1.0"}, {"boost", BOOST_LIB_VERSION}};
  ordered_json out;
  if (certs.size() == 1) {
    const auto& c = certs.front();
    out = {{"suite", c.suite},
           {"cases_run", c.cases_run},
           {"cases_failed", c.cases_failed()},
           {"failures", failures_json(c, false)}};
  } else {
    std::int64_t run = 0;
    std::int64_t failed = 0;
    ordered_json failures = ordered_json::array();
    ordered_json suites = ordered_json::array();
    for (const auto& c : certs) {
      run += c.cases_run;
      failed += c.cases_failed();
      for (auto& f : failures_json(c, true)) failures.push_back(f);
      suites.push_back({{"suite", c.suite}, {"cases_run", c.cases_run}, {"cases_failed", c.cases_failed()}});
    }
    out = {{"suite", "all"}, {"cases_run", run}, {"cases_failed", failed}, {"failures", failures}, {"suites", suites}};
  }
  out["versions"] = versions;
  return out.dump(2);
}

}  // namespace pseudocurve::cli
