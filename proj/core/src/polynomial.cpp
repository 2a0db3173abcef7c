#include "pseudocurve/polynomial.hpp"

#include "pseudocurve/error.hpp"

#include <algorithm>

namespace pseudocurve {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(GaussianRational c, std::size_t degree) {
  std::vector<GaussianRational> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> Polynomial::order() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) return static_cast<int>(j);
  }
  return std::nullopt;
}

GaussianRational Polynomial::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : GaussianRational{};
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    d[j - 1] = coeffs_[j] * GaussianRational(static_cast<long long>(j));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return Polynomial(std::vector<GaussianRational>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(GaussianRational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
  Polynomial rem = num;
  const int dd = den.degree();
  if (rem.degree() < dd) return {Polynomial{}, rem};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(rem.degree() - dd + 1));
  const GaussianRational lead_inv = den.coeffs_.back().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const auto shift = static_cast<std::size_t>(rem.degree() - dd);
    const GaussianRational factor = rem.coeffs_.back() * lead_inv;
    quot[shift] = factor;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j) {
      rem.coeffs_[shift + j] -= factor * den.coeffs_[j];
    }
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= a.coeffs_.back().inverse();
  return a;
}

}  // namespace pseudocurve
