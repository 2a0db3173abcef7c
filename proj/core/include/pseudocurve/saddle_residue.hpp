#pragma once

#include "pseudocurve/polynomial.hpp"
#include "pseudocurve/rational.hpp"

#include <span>
#include <tuple>
#include <vector>

namespace pseudocurve {

/// Data of the reduced residue form: Q(w) = Re Res_{z=0} z^{l-k} P(z) (w_0 + ... + w_k z^k)^2.
class ResidueForm {
 public:
  /// Throws Error(DomainError) unless k >= 1, 0 <= l < k, deg P <= k - l - 1 and P(0) != 0.
  ResidueForm(int k, int l, Polynomial p);

  int k() const { return k_; }
  int l() const { return l_; }
  const Polynomial& p() const { return p_; }
  /// Real dimension 2(k+1) of the variable space.
  int dimension() const { return 2 * (k_ + 1); }

 private:
  int k_;
  int l_;
  Polynomial p_;
};

/// Dense symmetric matrix with exact rational entries.
using RationalMatrix = std::vector<std::vector<Rational>>;

struct InertiaResult {
  int ind_plus = 0;
  int ind_minus = 0;
  int nullity = 0;
  int s_ind = 0;

  friend bool operator==(const InertiaResult&, const InertiaResult&) = default;
};

/// Matrix of Q in the real variables (x_0, y_0, ..., x_k, y_k), w_j = x_j + i y_j, so that
/// Q(w) = v^T M v. The residue is the plain coefficient of z^{-1}.
RationalMatrix residue_form_matrix(const ResidueForm& f);

/// Sylvester inertia by exact symmetric elimination (1x1 pivots, 2x2 hyperbolic pivots on a
/// zero diagonal). Requires a square symmetric matrix.
InertiaResult symmetric_inertia(RationalMatrix m);

InertiaResult inertia(const ResidueForm& f);

/// Floating-point inertia from eigenvalues, with zero threshold tol * max(1, max |entry|).
/// Forms with genuinely tiny eigenvalues exist, so prefer floating_inertia_consistent.
InertiaResult inertia_floating(const ResidueForm& f, double tol = 1e-9);

/// Eigenvalue cross-check of an exact inertia: the `nullity` eigenvalues of smallest modulus are
/// below tol * scale and the signs of the others match ind_plus / ind_minus.
bool floating_inertia_consistent(const ResidueForm& f, const InertiaResult& exact, double tol = 1e-9);

/// inertia(f) == inertia of the same form with P replaced by its constant term.
bool a0_equivalence_check(const ResidueForm& f);

/// max(0, k - l - nu). Throws Error(DomainError) unless 0 <= l <= k and nu >= 0.
int saddle_index_at_cusp(int k, int l, int nu);

struct CuspSaddleData {
  int k = 1;
  int l = 0;
  int nu = 0;
};

int total_saddle_index(std::span<const CuspSaddleData> cusps);

}  // namespace pseudocurve
