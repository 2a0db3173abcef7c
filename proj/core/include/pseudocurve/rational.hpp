#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pseudocurve {

using BigInt = boost::multiprecision::cpp_int;
/// Arbitrary precision rational, always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (decimal). Throws Error(ParseError) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

/// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws Error(DomainError) for zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(unsigned exponent) const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "a", "a/b", or "a:b" (real and imaginary part separated by a colon).
GaussianRational parse_gaussian(std::string_view text);
std::string format_gaussian(const GaussianRational& value);
std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace pseudocurve
