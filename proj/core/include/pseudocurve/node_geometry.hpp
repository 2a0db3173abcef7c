#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace pseudocurve {

using Complex = std::complex<double>;

/// Cylinder Z(a, b) = [a, b] x S^1 with the flat metric dt^2 + dθ^2.
struct Cylinder {
  double a = 0.0;
  double b = 1.0;
};

/// Throws Error(DomainError) unless a < b.
void validate(const Cylinder& c);

/// Band Z_k = Z(k, k + 1).
Cylinder band(int k);

/// Conformal radius e^{b-a} of the annulus covered by Z(a, b).
double radius_exp(const Cylinder& c);
/// Conformal radius log(1/|λ|) attached to the neck A_λ; throws for |λ| outside (0, 1).
double radius_log(Complex lambda);

/// Node parameter λ with |λ| < eps; λ = 0 is the nodal curve itself.
struct NodeParameter {
  Complex lambda{0.0, 0.0};
  double eps = 0.1;
};
void validate(const NodeParameter& p);

/// Density 1 + |λ|^2 / |z+|^4 of the hyperbola metric against |dz+|^2.
/// Throws SingularPoint for z+ = 0 and DomainError outside |λ| <= |z+| <= 1.
double hyperbola_metric_density(Complex z_plus, Complex lambda);

/// ρ_λ(r) = (r^2 - |λ|^2 / r^2) / (1 - |λ|^2), a diffeomorphism [|λ|, 1] -> [-1, 1].
double rho_of_r(double r, Complex lambda);
/// The inverse R_λ(ρ). λ = 0 is allowed and gives sqrt(ρ) on (0, 1].
double r_of_rho(double rho, Complex lambda);
/// dR_λ/dρ in closed form.
double r_of_rho_derivative(double rho, Complex lambda);

/// Coefficient c(ρ, θ) of the pullback of the hyperbola area form under (ρ, θ) -> R_λ(ρ) e^{iθ},
/// written against dρ ∧ dθ.
double pullback_area_density(double rho, double theta, Complex lambda);

struct VolumeIdentityReport {
  /// Max |c(ρ, θ) - (1 - |λ|^2) / 2| over the grid.
  double max_residual = 0.0;
  /// Max |c(ρ, θ) / (1 - |λ|^2) - 1 / 2|: the pullback is half of 1 - |λ|^2.
  double max_ratio_deviation = 0.0;
  /// Trapezoid integral of the pullback over Z(-1, 1).
  double pulled_back_area = 0.0;
  /// Hyperbola area 2π (1 - |λ|^2) of |λ| <= |z+| <= 1 in closed form.
  double annulus_area = 0.0;
};

/// Grid of grid x grid points on Z(-1, 1) (ρ endpoints included, θ periodic).
/// Requires 0 < |λ| < 1 and grid >= 2.
VolumeIdentityReport volume_identity(Complex lambda, int grid);
double volume_identity_residual(Complex lambda, int grid);
/// λ = 0 limit with R_0 = sqrt(ρ) on ρ in (0, 1]: pullback of the flat form equals 1/2.
double volume_identity_limit_residual(int grid);

struct LaurentMode {
  int m = 0;
  std::vector<Complex> v;
};

/// u(t, θ) = sum_m e^{m(-t + iθ)} v_m on a cylinder. Repeated modes are merged; modes are sorted.
class CylinderMap {
 public:
  /// Throws Error(DomainError) for an empty or ragged coefficient list or an invalid domain.
  CylinderMap(std::vector<LaurentMode> modes, Cylinder domain);

  const std::vector<LaurentMode>& modes() const { return modes_; }
  const Cylinder& domain() const { return domain_; }
  int dimension() const { return dimension_; }

  std::vector<Complex> evaluate(double t, double theta) const;
  /// Keeps the modes whose index satisfies keep(m).
  template <class Pred>
  CylinderMap filtered(Pred keep) const {
    std::vector<LaurentMode> out;
    for (const auto& mode : modes_) {
      if (keep(mode.m)) out.push_back(mode);
    }
    if (out.empty()) out.push_back({0, std::vector<Complex>(static_cast<std::size_t>(dimension_))});
    return CylinderMap(std::move(out), domain_);
  }

 private:
  std::vector<LaurentMode> modes_;
  Cylinder domain_;
  int dimension_ = 0;
};

/// ||du||^2 over Z(a, b) in closed form; Z(a, b) must lie in the domain.
double band_energy(const CylinderMap& u, const Cylinder& z);
double band_energy(const CylinderMap& u, int k);
/// ||u||^2_{L^2} over Z(a, b).
double band_l2_squared(const CylinderMap& u, const Cylinder& z);
/// weight ||u||^2_{L^2} + ||du||^2_{L^2} over Z(a, b).
double band_l12_squared(const CylinderMap& u, const Cylinder& z, double weight = 1.0);

/// 2 e_k / (e_{k-1} + e_{k+1}). Throws DegenerateMap on a zero denominator.
double three_band_ratio(const CylinderMap& u, int k);

inline constexpr double kDefaultDecayExponent = 2.0;

/// 1 / cosh(2).
double gamma_star();

struct DecayReport {
  std::vector<double> energies;  ///< e_k, k = 0 .. l-1
  double gamma_star = 0.0;
  /// Smallest C with e_k <= C (e^{-2k} e_{[0,2]} + e^{-2(l-k)} e_{[l-2,l]}) for 1 <= k <= l-2.
  double c_fit = 0.0;
  /// Same with exponent 2 alpha = 4; set when the map has no modes in {0, ±1}.
  std::optional<double> c_fit_sharp;
  bool pass = false;
};

/// Requires the domain to contain Z(0, l) and l >= 3.
DecayReport decay_estimate_check(const CylinderMap& u, int l);

struct SupersolutionParams {
  double c1 = 0.0;
  double alpha = 1.0;
  double s = 1.0;
};

struct SupersolutionReport {
  int l = 0;
  int k_star = 0;
  std::vector<double> a_plus;   ///< A+_k, k = 0 .. l
  std::vector<double> a_minus;  ///< A-_k, k = 0 .. l
  std::vector<double> gamma;    ///< γ_k, k = 0 .. l
  /// Smallest k0 >= 1 with the supersolution inequality and γ_k < 1 on [k0, l - k0].
  std::optional<int> k0;
  /// max A+_k e^{2k} and max A-_k e^{2(l-k)} over [k0, l - k0] (over [1, l-1] when k0 is unset).
  double decay_constant_plus = 0.0;
  double decay_constant_minus = 0.0;
};

/// Piecewise sequences stitched at k_star; k_star defaults to l / 2 and must lie in [1, l-1].
/// Requires l >= 2. Infinite values at the ends are the limits of the defining exponents.
SupersolutionReport supersolution_sequences(int l, std::optional<int> k_star = std::nullopt,
                                            const SupersolutionParams& params = {});

struct TruncationResult {
  CylinderMap principal;  ///< modes -1, 0, 1
  double remainder_norm = 0.0;  ///< L^{1,2}(Z_k) norm of the remaining modes
};

TruncationResult three_term_truncation(const CylinderMap& u, int k, double weight = 1.0);

/// Checks r_k <= (γ2 / 2)(r_{k-1} + r_{k+1}) with r the squared L^{1,2} band norm of the
/// remainder and γ2 = 1 / cosh 4; returns the observed ratio 2 r_k / (r_{k-1} + r_{k+1})
/// (zero for a vanishing remainder).
double remainder_band_ratio(const CylinderMap& u, int k, double weight = 1.0);

}  // namespace pseudocurve
