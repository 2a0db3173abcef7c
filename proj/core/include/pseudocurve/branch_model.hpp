#pragma once

#include "pseudocurve/cusp_combinatorics.hpp"
#include "pseudocurve/polynomial.hpp"
#include "pseudocurve/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pseudocurve {

struct BranchTerm {
  int exponent = 0;
  std::vector<GaussianRational> coeff;

  friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
};

/// Truncated formal power series t -> C^n with exact Q(i) coefficients: the local model of a
/// parameterized curve germ through the origin. Terms of order above truncation_order are unknown.
class Branch {
 public:
  /// Throws Error(InvalidBranch) on n < 2, an empty or unsorted term list, zero coefficient
  /// vectors, wrong vector sizes, or exponents outside [1, truncation_order].
  Branch(int ambient_dim, int truncation_order, std::vector<BranchTerm> terms);

  /// Builds a branch from coordinate polynomials in t; exponents where every coordinate vanishes are skipped.
  static Branch from_coordinates(std::span<const Polynomial> coordinates, int truncation_order);

  int ambient_dim() const { return ambient_dim_; }
  int truncation_order() const { return truncation_order_; }
  std::span<const BranchTerm> terms() const { return terms_; }

  Polynomial coordinate(int index) const;
  std::vector<Polynomial> coordinates() const;

  /// The same germ under t -> c t.
  Branch rescaled(const GaussianRational& c) const;

  friend bool operator==(const Branch&, const Branch&) = default;

 private:
  int ambient_dim_;
  int truncation_order_;
  std::vector<BranchTerm> terms_;
};

struct BranchJetNormalForm {
  int k = 0;  ///< cusp order
  int l = 0;  ///< secondary cusp index, 0 <= l <= k
  Polynomial p1;  ///< first coordinate is z^{k+1} p1(z) + O(z^{2k+1}); deg <= k, p1(0) != 0
  Polynomial p2;  ///< second coordinate is z^{k+l+2} p2(z) + O(z^{2k+1}); zero iff l == k
};

/// Lowest exponent present.
int multiplicity(const Branch& b);
/// Order of vanishing of du at 0, i.e. multiplicity - 1.
int cusp_order(const Branch& b);

/// True if the first coordinate is c * t^mu (c != 0) and no other coordinate has a term whose
/// exponent is a multiple of mu.
bool is_prepared(const Branch& b);

/// Moves a pure-monomial coordinate of lowest order to the front, normalizes it to t^mu and removes
/// every term t^{j mu} of the other coordinates by the substitutions y <- y - a x^j. Only exact
/// coordinate changes are used, so all local invariants are preserved. Throws Error(InvalidBranch)
/// if no coordinate of lowest order is a pure monomial.
Branch prepare(const Branch& b);

/// Critical exponents by the gcd-drop scan over the non-leading coordinates of prepare(b).
/// Throws Error(MultipleOrTruncatedBranch) if the running gcd does not reach 1 within truncation.
CuspType cusp_type_of_branch(const Branch& b);

/// t -> (t^{p0}, t^{p1} + ... + t^{pl}, 0, ...). The model is exact, so its truncation order is
/// max(p_l, 2 p0 - 1): enough for both the cusp type and the jet normal form.
Branch branch_from_cusp_type(const CuspType& p, int ambient_dim = 2);

/// Jet of order 2k+1 in the normal form (z^{k+1} P1, z^{k+l+2} P2). Requires ambient_dim == 2
/// (Error(InvalidBranch) otherwise) and truncation_order >= 2k+1 (Error(TruncationTooShort)).
BranchJetNormalForm jet_normal_form(const Branch& b);

int secondary_cusp_index(const Branch& b);

/// Cusp order 1 and secondary cusp index 0.
bool is_ordinary_cusp(const Branch& b);

/// Both computation routes for the intersection multiplicity of two plane branches.
struct IntersectionReport {
  int multiplicity = 0;
  /// ord_t F2(b1(t)) with F2 the elimination polynomial of b2.
  int forward_valuation = 0;
  /// ord_s F1(b2(s)).
  int backward_valuation = 0;
  /// Contact order of the two graphs over a common axis; set only for a pair of smooth branches.
  std::optional<int> graph_contact;
};

/// Intersection multiplicity at the origin of two plane branches. Requires ambient_dim == 2 and
/// primitive parameterizations. Throws Error(IndeterminateWithinTruncation) when the value could
/// change under the unknown higher-order terms (in particular for identical truncations).
IntersectionReport intersection_report(const Branch& b1, const Branch& b2);
int intersection_multiplicity(const Branch& b1, const Branch& b2);

/// Implicit equation of a plane branch obtained by eliminating the parameter:
/// result[i] is the coefficient of v^i as a polynomial in u, where u is coordinate
/// `eliminated_coordinate` and v is the other one.
struct EliminationPolynomial {
  int eliminated_coordinate = 0;
  std::vector<Polynomial> coefficients;

  /// F(x(t), y(t)) for a plane curve (x, y) given by its coordinate polynomials.
  Polynomial evaluate_along(std::span<const Polynomial> curve) const;
  EliminationPolynomial derivative_u() const;
  EliminationPolynomial derivative_v() const;
};

EliminationPolynomial elimination_polynomial(const Branch& b);

}  // namespace pseudocurve
