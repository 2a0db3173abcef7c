#include "pseudocurve/node_geometry.hpp"

#include "pseudocurve/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace pseudocurve {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

/// ∫_a^b e^{-2 m t} dt.
double exp_integral(int m, double a, double b) {
  if (m == 0) return b - a;
  const double rate = 2.0 * m;
  return -std::exp(-rate * a) * std::expm1(-rate * (b - a)) / rate;
}

void require_inside(const Cylinder& outer, const Cylinder& inner) {
  if (inner.a < outer.a - kSlack || inner.b > outer.b + kSlack) {
    throw Error(ErrorKind::DomainError, "Z(" + std::to_string(inner.a) + "," + std::to_string(inner.b) +
                                            ") is not contained in the domain of the map");
  }
}

void require_neck(Complex lambda) {
  const double mod = std::abs(lambda);
  if (!(mod > 0.0 && mod < 1.0)) throw Error(ErrorKind::DomainError, "|lambda| must lie in (0, 1)");
}

}  // namespace

void validate(const Cylinder& c) {
  if (!(c.a < c.b)) throw Error(ErrorKind::DomainError, "cylinder needs a < b");
}

Cylinder band(int k) { return {static_cast<double>(k), static_cast<double>(k) + 1.0}; }

double radius_exp(const Cylinder& c) {
  validate(c);
  return std::exp(c.b - c.a);
}

double radius_log(Complex lambda) {
  require_neck(lambda);
  return -std::log(std::abs(lambda));
}

void validate(const NodeParameter& p) {
  if (!(p.eps > 0.0 && p.eps <= 1.0)) throw Error(ErrorKind::DomainError, "eps must lie in (0, 1]");
  if (!(std::abs(p.lambda) < p.eps)) throw Error(ErrorKind::DomainError, "|lambda| must be below eps");
}

double hyperbola_metric_density(Complex z_plus, Complex lambda) {
  const double r = std::abs(z_plus);
  if (r == 0.0) throw Error(ErrorKind::SingularPoint, "the hyperbola metric is singular at z+ = 0");
  const double mod = std::abs(lambda);
  if (mod >= 1.0) throw Error(ErrorKind::DomainError, "|lambda| must be below 1");
  if (r < mod * (1.0 - kSlack) || r > 1.0 + kSlack) {
    throw Error(ErrorKind::DomainError, "z+ must satisfy |lambda| <= |z+| <= 1");
  }
  const double r2 = r * r;
  return 1.0 + (mod * mod) / (r2 * r2);
}

double rho_of_r(double r, Complex lambda) {
  const double mod = std::abs(lambda);
  if (mod >= 1.0) throw Error(ErrorKind::DomainError, "|lambda| must be below 1");
  const double lo = mod == 0.0 ? 0.0 : mod;
  if (!(r > 0.0) || r < lo * (1.0 - kSlack) || r > 1.0 + kSlack) {
    throw Error(ErrorKind::DomainError, "r must lie in [|lambda|, 1]");
  }
  const double l2 = mod * mod;
  return (r * r - l2 / (r * r)) / (1.0 - l2);
}

double r_of_rho(double rho, Complex lambda) {
  const double mod = std::abs(lambda);
  if (mod >= 1.0) throw Error(ErrorKind::DomainError, "|lambda| must be below 1");
  if (mod == 0.0) {
    if (!(rho > 0.0 && rho <= 1.0 + kSlack)) throw Error(ErrorKind::DomainError, "rho must lie in (0, 1] for lambda = 0");
    return std::sqrt(rho);
  }
  if (!(rho >= -1.0 - kSlack && rho <= 1.0 + kSlack)) throw Error(ErrorKind::DomainError, "rho must lie in [-1, 1]");
  const double a = 1.0 - mod * mod;
  const double pa = rho * a;
  const double s = std::hypot(pa, 2.0 * mod);
  // Both branches are the positive root of r^4 - ρ a r^2 - |λ|^2 = 0, chosen to avoid cancellation.
  const double r2 = pa >= 0.0 ? (pa + s) / 2.0 : 2.0 * mod * mod / (s - pa);
  return std::sqrt(r2);
}

double r_of_rho_derivative(double rho, Complex lambda) {
  const double mod = std::abs(lambda);
  const double r = r_of_rho(rho, lambda);
  if (mod == 0.0) return 0.5 / r;
  const double a = 1.0 - mod * mod;
  const double s = std::hypot(rho * a, 2.0 * mod);
  return a * r / (2.0 * s);
}

double pullback_area_density(double rho, double theta, Complex lambda) {
  const double r = r_of_rho(rho, lambda);
  const Complex z = std::polar(r, theta);
  // (i/2) dz ∧ dz̄ = r dr ∧ dθ.
  return hyperbola_metric_density(z, lambda) * r * r_of_rho_derivative(rho, lambda);
}

VolumeIdentityReport volume_identity(Complex lambda, int grid) {
  require_neck(lambda);
  if (grid < 2) throw Error(ErrorKind::DomainError, "grid must be at least 2");
  const double a = 1.0 - std::norm(lambda);
  const double target = a / 2.0;
  VolumeIdentityReport out;
  const double h_rho = 2.0 / (grid - 1);
  const double h_theta = kTwoPi / grid;
  for (int i = 0; i < grid; ++i) {
    const double rho = i == grid - 1 ? 1.0 : -1.0 + h_rho * i;
    const double w_rho = (i == 0 || i == grid - 1) ? 0.5 : 1.0;
    for (int j = 0; j < grid; ++j) {
      const double c = pullback_area_density(rho, h_theta * j, lambda);
      out.max_residual = std::max(out.max_residual, std::abs(c - target));
      out.max_ratio_deviation = std::max(out.max_ratio_deviation, std::abs(c / a - 0.5));
      out.pulled_back_area += w_rho * c * h_rho * h_theta;
    }
  }
  out.annulus_area = kTwoPi * a;
  return out;
}

double volume_identity_residual(Complex lambda, int grid) { return volume_identity(lambda, grid).max_residual; }

double volume_identity_limit_residual(int grid) {
  if (grid < 2) throw Error(ErrorKind::DomainError, "grid must be at least 2");
  double worst = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double rho = static_cast<double>(i) / grid;
    for (int j = 0; j < grid; ++j) {
      const double c = pullback_area_density(rho, kTwoPi * j / grid, Complex{0.0, 0.0});
      worst = std::max(worst, std::abs(c - 0.5));
    }
  }
  return worst;
}

CylinderMap::CylinderMap(std::vector<LaurentMode> modes, Cylinder domain) : domain_(domain) {
  validate(domain_);
  if (modes.empty()) throw Error(ErrorKind::DomainError, "a cylinder map needs at least one mode");
  dimension_ = static_cast<int>(modes.front().v.size());
  if (dimension_ == 0) throw Error(ErrorKind::DomainError, "mode vectors must be non-empty");
  std::map<int, std::vector<Complex>> merged;
  for (auto& mode : modes) {
    if (static_cast<int>(mode.v.size()) != dimension_) {
      throw Error(ErrorKind::DomainError, "all mode vectors must have the same length");
    }
    auto [it, inserted] = merged.try_emplace(mode.m, std::move(mode.v));
    if (!inserted) {
      for (std::size_t i = 0; i < it->second.size(); ++i) it->second[i] += mode.v[i];
    }
  }
  for (auto& [m, v] : merged) modes_.push_back({m, std::move(v)});
}

std::vector<Complex> CylinderMap::evaluate(double t, double theta) const {
  std::vector<Complex> out(static_cast<std::size_t>(dimension_));
  for (const auto& mode : modes_) {
    const Complex e = std::exp(static_cast<double>(mode.m) * Complex(-t, theta));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += e * mode.v[i];
  }
  return out;
}

double band_energy(const CylinderMap& u, const Cylinder& z) {
  validate(z);
  require_inside(u.domain(), z);
  double e = 0.0;
  for (const auto& mode : u.modes()) {
    if (mode.m == 0) continue;
    const double m2 = static_cast<double>(mode.m) * mode.m;
    e += kTwoPi * 2.0 * m2 * norm2(mode.v) * exp_integral(mode.m, z.a, z.b);
  }
  return e;
}

double band_energy(const CylinderMap& u, int k) { return band_energy(u, band(k)); }

double band_l2_squared(const CylinderMap& u, const Cylinder& z) {
  validate(z);
  require_inside(u.domain(), z);
  double s = 0.0;
  for (const auto& mode : u.modes()) s += kTwoPi * norm2(mode.v) * exp_integral(mode.m, z.a, z.b);
  return s;
}

double band_l12_squared(const CylinderMap& u, const Cylinder& z, double weight) {
  if (weight < 0.0) throw Error(ErrorKind::DomainError, "norm weight must be non-negative");
  return weight * band_l2_squared(u, z) + band_energy(u, z);
}

double three_band_ratio(const CylinderMap& u, int k) {
  require_inside(u.domain(), {static_cast<double>(k) - 1.0, static_cast<double>(k) + 2.0});
  const double denom = band_energy(u, k - 1) + band_energy(u, k + 1);
  if (denom == 0.0) throw Error(ErrorKind::DegenerateMap, "neighbouring band energies vanish");
  return 2.0 * band_energy(u, k) / denom;
}

double gamma_star() { return 1.0 / std::cosh(2.0); }

namespace {

/// Smallest C with e_k <= C (e^{-rate k} head + e^{-rate (l-k)} tail) for 1 <= k <= l-2.
double fit_constant(const std::vector<double>& e, double head, double tail, int l, double rate) {
  double c = 0.0;
  for (int k = 1; k <= l - 2; ++k) {
    const double bound = std::exp(-rate * k) * head + std::exp(-rate * (l - k)) * tail;
    const double ek = e[static_cast<std::size_t>(k)];
    if (ek == 0.0) continue;
    if (bound == 0.0) return std::numeric_limits<double>::infinity();
    c = std::max(c, ek / bound);
  }
  return c;
}

}  // namespace

DecayReport decay_estimate_check(const CylinderMap& u, int l) {
  if (l < 3) throw Error(ErrorKind::DomainError, "decay check needs l >= 3");
  require_inside(u.domain(), {0.0, static_cast<double>(l)});
  DecayReport out;
  out.gamma_star = gamma_star();
  for (int k = 0; k < l; ++k) out.energies.push_back(band_energy(u, k));
  const double head = band_energy(u, Cylinder{0.0, 2.0});
  const double tail = band_energy(u, Cylinder{static_cast<double>(l) - 2.0, static_cast<double>(l)});
  out.c_fit = fit_constant(out.energies, head, tail, l, 2.0);
  const bool low_modes = std::any_of(u.modes().begin(), u.modes().end(), [](const LaurentMode& mode) {
    return std::abs(mode.m) <= 1 && norm2(mode.v) > 0.0;
  });
  if (!low_modes) out.c_fit_sharp = fit_constant(out.energies, head, tail, l, 2.0 * kDefaultDecayExponent);
  out.pass = std::isfinite(out.c_fit) && (!out.c_fit_sharp || std::isfinite(*out.c_fit_sharp));
  return out;
}

SupersolutionReport supersolution_sequences(int l, std::optional<int> k_star, const SupersolutionParams& params) {
  if (l < 2) throw Error(ErrorKind::DomainError, "supersolutions need l >= 2");
  const int ks = k_star.value_or(l / 2);
  if (ks < 1 || ks > l - 1) throw Error(ErrorKind::DomainError, "k* must lie in [1, l-1]");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double kd = ks;
  const double ld = l;

  SupersolutionReport out;
  out.l = l;
  out.k_star = ks;
  for (int k = 0; k <= l; ++k) {
    const double x = k;
    double plus = 0.0;
    double minus = 0.0;
    if (k <= ks) {
      plus = k == 0 ? 0.0 : std::exp(-2.0 * x - 1.0 / x);
      minus = k == 0 ? inf : std::exp(-2.0 * (ld - x) - 1.0 / (ld - kd) + 1.0 / x - 1.0 / kd);
    } else {
      plus = k == l ? inf : std::exp(-2.0 * x - 1.0 / kd + 1.0 / (ld - x) - 1.0 / (ld - kd));
      minus = k == l ? 0.0 : std::exp(-2.0 * (ld - x) - 1.0 / (ld - x));
    }
    out.a_plus.push_back(plus);
    out.a_minus.push_back(minus);
    const double decay = params.alpha * params.s;
    out.gamma.push_back(gamma_star() + params.c1 * (std::exp(-decay * x) + std::exp(-decay * (ld - x))));
  }

  auto holds = [&](int k) {
    const auto i = static_cast<std::size_t>(k);
    const double g = out.gamma[i];
    return g < 1.0 && out.a_plus[i] >= g / 2.0 * (out.a_plus[i - 1] + out.a_plus[i + 1]) &&
           out.a_minus[i] >= g / 2.0 * (out.a_minus[i - 1] + out.a_minus[i + 1]);
  };
  for (int k0 = 1; k0 <= l - k0; ++k0) {
    bool all = true;
    for (int k = k0; k <= l - k0 && all; ++k) all = holds(k);
    if (all) {
      out.k0 = k0;
      break;
    }
  }

  const int lo = out.k0.value_or(1);
  const int hi = l - lo;
  for (int k = lo; k <= hi; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out.decay_constant_plus = std::max(out.decay_constant_plus, out.a_plus[i] * std::exp(2.0 * k));
    out.decay_constant_minus = std::max(out.decay_constant_minus, out.a_minus[i] * std::exp(2.0 * (l - k)));
  }
  return out;
}

TruncationResult three_term_truncation(const CylinderMap& u, int k, double weight) {
  TruncationResult out{u.filtered([](int m) { return std::abs(m) <= 1; }), 0.0};
  const CylinderMap rest = u.filtered([](int m) { return std::abs(m) >= 2; });
  out.remainder_norm = std::sqrt(band_l12_squared(rest, band(k), weight));
  return out;
}

double remainder_band_ratio(const CylinderMap& u, int k, double weight) {
  require_inside(u.domain(), {static_cast<double>(k) - 1.0, static_cast<double>(k) + 2.0});
  const CylinderMap rest = u.filtered([](int m) { return std::abs(m) >= 2; });
  const double mid = band_l12_squared(rest, band(k), weight);
  const double sides = band_l12_squared(rest, band(k - 1), weight) + band_l12_squared(rest, band(k + 1), weight);
  if (sides == 0.0) return 0.0;
  return 2.0 * mid / sides;
}

}  // namespace pseudocurve
