#pragma once

#include "pseudocurve/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pseudocurve {

/// Dense univariate polynomial over Q(i). coeffs()[j] is the coefficient of x^j;
/// trailing zeros are never stored, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  static Polynomial monomial(GaussianRational c, std::size_t degree);
  static Polynomial constant(GaussianRational c) { return monomial(std::move(c), 0); }

  std::span<const GaussianRational> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<int> order() const;
  GaussianRational coeff(std::size_t j) const;

  GaussianRational evaluate(const GaussianRational& x) const;
  Polynomial derivative() const;
  /// Drops every term of degree > max_degree.
  Polynomial truncated(std::size_t max_degree) const;
  Polynomial pow(unsigned exponent) const;
  /// Composition this(inner(x)).
  Polynomial compose(const Polynomial& inner) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division over the field Q(i). Throws Error(DomainError) if divisor is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

}  // namespace pseudocurve
