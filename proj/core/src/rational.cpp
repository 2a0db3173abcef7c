#include "pseudocurve/rational.hpp"

#include "pseudocurve/error.hpp"

#include <cctype>
#include <ostream>

namespace pseudocurve {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidBranch: return "InvalidBranch";
    case ErrorKind::MultipleOrTruncatedBranch: return "MultipleOrTruncatedBranch";
    case ErrorKind::TruncationTooShort: return "TruncationTooShort";
    case ErrorKind::IndeterminateWithinTruncation: return "IndeterminateWithinTruncation";
    case ErrorKind::InvalidCuspType: return "InvalidCuspType";
    case ErrorKind::GenusFormulaInconsistent: return "GenusFormulaInconsistent";
    case ErrorKind::LineBundleOnly: return "LineBundleOnly";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = strip(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt num = parse_integer(t.substr(0, slash), text);
  const BigInt den = parse_integer(t.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

int sign(const Rational& value) { return value > 0 ? 1 : (value < 0 ? -1 : 0); }

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n == 0) throw Error(ErrorKind::DomainError, "inverse of zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

GaussianRational parse_gaussian(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return GaussianRational(parse_rational(text));
  return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

std::string format_gaussian(const GaussianRational& value) {
  if (value.im() == 0) return format_rational(value.re());
  return format_rational(value.re()) + ":" + format_rational(value.im());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
  return os << format_gaussian(value);
}

}  // namespace pseudocurve
