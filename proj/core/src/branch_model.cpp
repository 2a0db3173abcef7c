#include "pseudocurve/branch_model.hpp"

#include "pseudocurve/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pseudocurve {

Branch::Branch(int ambient_dim, int truncation_order, std::vector<BranchTerm> terms)
    : ambient_dim_(ambient_dim), truncation_order_(truncation_order), terms_(std::move(terms)) {
  if (ambient_dim_ < 2) throw Error(ErrorKind::InvalidBranch, "ambient dimension must be at least 2");
  if (truncation_order_ < 1) throw Error(ErrorKind::InvalidBranch, "truncation order must be positive");
  if (terms_.empty()) throw Error(ErrorKind::InvalidBranch, "empty term list (constant map)");
  int previous = 0;
  for (const auto& term : terms_) {
    if (term.exponent <= previous) {
      throw Error(ErrorKind::InvalidBranch, "exponents must be positive and strictly increasing");
    }
    if (term.exponent > truncation_order_) {
      throw Error(ErrorKind::InvalidBranch, "exponent " + std::to_string(term.exponent) +
                                                " exceeds truncation order " + std::to_string(truncation_order_));
    }
    if (static_cast<int>(term.coeff.size()) != ambient_dim_) {
      throw Error(ErrorKind::InvalidBranch, "coefficient vector has the wrong length");
    }
    if (std::all_of(term.coeff.begin(), term.coeff.end(), [](const auto& c) { return c.is_zero(); })) {
      throw Error(ErrorKind::InvalidBranch, "zero coefficient vector at exponent " + std::to_string(term.exponent));
    }
    previous = term.exponent;
  }
}

Branch Branch::from_coordinates(std::span<const Polynomial> coordinates, int truncation_order) {
  const int n = static_cast<int>(coordinates.size());
  int top = 0;
  for (const auto& c : coordinates) top = std::max(top, c.degree());
  std::vector<BranchTerm> terms;
  for (int e = 0; e <= top; ++e) {
    BranchTerm term{e, {}};
    bool nonzero = false;
    for (const auto& c : coordinates) {
      term.coeff.push_back(c.coeff(static_cast<std::size_t>(e)));
      nonzero = nonzero || !term.coeff.back().is_zero();
    }
    if (!nonzero) continue;
    if (e == 0) throw Error(ErrorKind::InvalidBranch, "branch must pass through the origin");
    terms.push_back(std::move(term));
  }
  return Branch(n, truncation_order, std::move(terms));
}

Polynomial Branch::coordinate(int index) const {
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(terms_.back().exponent) + 1);
  for (const auto& term : terms_) coeffs[static_cast<std::size_t>(term.exponent)] = term.coeff[index];
  return Polynomial(std::move(coeffs));
}

std::vector<Polynomial> Branch::coordinates() const {
  std::vector<Polynomial> out;
  for (int j = 0; j < ambient_dim_; ++j) out.push_back(coordinate(j));
  return out;
}

Branch Branch::rescaled(const GaussianRational& c) const {
  if (c.is_zero()) throw Error(ErrorKind::DomainError, "rescaling factor must be nonzero");
  auto terms = terms_;
  for (auto& term : terms) {
    const GaussianRational factor = c.pow(static_cast<unsigned>(term.exponent));
    for (auto& x : term.coeff) x *= factor;
  }
  return Branch(ambient_dim_, truncation_order_, std::move(terms));
}

int multiplicity(const Branch& b) { return b.terms().front().exponent; }

int cusp_order(const Branch& b) { return multiplicity(b) - 1; }

namespace {

bool is_monomial_of_degree(const Polynomial& p, int degree) {
  const auto ord = p.order();
  return ord && *ord == degree && p.degree() == degree;
}

void require_plane(const Branch& b) {
  if (b.ambient_dim() != 2) {
    throw Error(ErrorKind::InvalidBranch, "operation is defined for plane branches (ambient_dim = 2) only");
  }
}

}  // namespace

bool is_prepared(const Branch& b) {
  const int mu = multiplicity(b);
  const auto coords = b.coordinates();
  if (!is_monomial_of_degree(coords[0], mu)) return false;
  for (std::size_t j = 1; j < coords.size(); ++j) {
    const auto c = coords[j].coeffs();
    for (std::size_t e = 0; e < c.size(); e += static_cast<std::size_t>(mu)) {
      if (!c[e].is_zero()) return false;
    }
  }
  return true;
}

Branch prepare(const Branch& b) {
  const int mu = multiplicity(b);
  auto coords = b.coordinates();
  const auto lead = std::find_if(coords.begin(), coords.end(),
                                 [mu](const Polynomial& p) { return is_monomial_of_degree(p, mu); });
  if (lead == coords.end()) {
    throw Error(ErrorKind::InvalidBranch,
                "not in prepared form: no coordinate of lowest order is a pure monomial");
  }
  std::rotate(coords.begin(), lead, lead + 1);
  // x <- x / c turns the leading coordinate into t^mu.
  coords[0] = Polynomial::monomial(GaussianRational(1), static_cast<std::size_t>(mu));
  for (std::size_t j = 1; j < coords.size(); ++j) {
    std::vector<GaussianRational> c(coords[j].coeffs().begin(), coords[j].coeffs().end());
    // y <- y - a x^q kills exactly the t^{q mu} term, as x is a pure monomial.
    for (std::size_t e = 0; e < c.size(); e += static_cast<std::size_t>(mu)) c[e] = GaussianRational{};
    coords[j] = Polynomial(std::move(c));
  }
  return Branch::from_coordinates(coords, b.truncation_order());
}

CuspType cusp_type_of_branch(const Branch& b) {
  const Branch prepared = prepare(b);
  std::vector<int> exponents{multiplicity(prepared)};
  int d = exponents.front();
  for (const auto& term : prepared.terms()) {
    if (d == 1) break;
    const bool in_tail = std::any_of(term.coeff.begin() + 1, term.coeff.end(),
                                     [](const auto& c) { return !c.is_zero(); });
    if (!in_tail) continue;
    const int next = std::gcd(d, term.exponent);
    if (next < d) {
      exponents.push_back(term.exponent);
      d = next;
    }
  }
  if (d != 1) {
    throw Error(ErrorKind::MultipleOrTruncatedBranch,
                "gcd of exponents stays at " + std::to_string(d) + " up to truncation order " +
                    std::to_string(b.truncation_order()));
  }
  return CuspType(std::move(exponents));
}

Branch branch_from_cusp_type(const CuspType& p, int ambient_dim) {
  if (ambient_dim < 2) throw Error(ErrorKind::InvalidBranch, "ambient dimension must be at least 2");
  const auto exps = p.exponents();
  std::vector<Polynomial> coords(static_cast<std::size_t>(ambient_dim));
  coords[0] = Polynomial::monomial(GaussianRational(1), static_cast<std::size_t>(exps[0]));
  for (std::size_t i = 1; i < exps.size(); ++i) {
    coords[1] += Polynomial::monomial(GaussianRational(1), static_cast<std::size_t>(exps[i]));
  }
  const int truncation = std::max(p.last(), 2 * p.first() - 1);
  return Branch::from_coordinates(coords, truncation);
}

BranchJetNormalForm jet_normal_form(const Branch& b) {
  require_plane(b);
  const int k = cusp_order(b);
  if (b.truncation_order() < 2 * k + 1) {
    throw Error(ErrorKind::TruncationTooShort, "jet normal form needs truncation order " +
                                                   std::to_string(2 * k + 1) + ", have " +
                                                   std::to_string(b.truncation_order()));
  }
  const Branch prepared = prepare(b);
  const auto x = prepared.coordinate(0);
  const auto y = prepared.coordinate(1);
  const auto top = static_cast<std::size_t>(2 * k + 1);

  BranchJetNormalForm out;
  out.k = k;
  std::vector<GaussianRational> p1;
  for (std::size_t e = static_cast<std::size_t>(k) + 1; e <= top; ++e) p1.push_back(x.coeff(e));
  out.p1 = Polynomial(std::move(p1));

  const auto ord = y.truncated(top).order();
  if (!ord) {
    out.l = k;
    return out;
  }
  out.l = *ord - k - 2;
  if (out.l < 0) throw std::logic_error("prepared branch has a second-coordinate term of order <= k + 1");
  std::vector<GaussianRational> p2;
  for (auto e = static_cast<std::size_t>(*ord); e <= top; ++e) p2.push_back(y.coeff(e));
  out.p2 = Polynomial(std::move(p2));
  return out;
}

int secondary_cusp_index(const Branch& b) { return jet_normal_form(b).l; }

bool is_ordinary_cusp(const Branch& b) {
  require_plane(b);
  if (cusp_order(b) != 1) return false;
  return secondary_cusp_index(b) == 0;
}

// ---------------------------------------------------------------------------------------------
// Intersection multiplicity.

namespace {

constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Reduces an element of Q(i)[u][s] (index = power of s) modulo the monic-after-scaling relation
/// X(s) = u, where X has degree D.
std::vector<Polynomial> reduce_mod(std::vector<Polynomial> element, const Polynomial& X) {
  const int D = X.degree();
  const GaussianRational lead_inv = X.coeffs().back().inverse();
  const Polynomial u = Polynomial::monomial(GaussianRational(1), 1);
  for (int p = static_cast<int>(element.size()) - 1; p >= D; --p) {
    Polynomial c = std::move(element[static_cast<std::size_t>(p)]);
    element[static_cast<std::size_t>(p)] = Polynomial{};
    if (c.is_zero()) continue;
    c *= lead_inv;
    const auto base = static_cast<std::size_t>(p - D);
    element[base] += c * u;
    for (int j = 0; j < D; ++j) {
      const GaussianRational& xj = X.coeffs()[static_cast<std::size_t>(j)];
      if (xj.is_zero()) continue;
      element[base + static_cast<std::size_t>(j)] -= c * xj;
    }
  }
  element.resize(static_cast<std::size_t>(D));
  return element;
}

/// Coefficients of det(v I - K) by the Faddeev-LeVerrier recursion over Q(i)[u].
std::vector<Polynomial> characteristic_polynomial(const PolyMatrix& K) {
  const std::size_t n = K.size();
  auto multiply = [n](const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
      }
    return out;
  };
  auto trace = [n](const PolyMatrix& a) {
    Polynomial t;
    for (std::size_t i = 0; i < n; ++i) t += a[i][i];
    return t;
  };

  std::vector<Polynomial> c(n + 1);
  c[n] = Polynomial::constant(GaussianRational(1));
  PolyMatrix M(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) M[i][i] = c[n];
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      M = multiply(K, M);
      for (std::size_t i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
    }
    const PolyMatrix KM = multiply(K, M);
    c[n - k] = trace(KM) * GaussianRational(Rational(-1, static_cast<long long>(k)));
  }
  return c;
}

int branch_content_gcd(const Branch& b) {
  int g = 0;
  for (const auto& term : b.terms()) g = std::gcd(g, term.exponent);
  return g;
}

void require_intersection_input(const Branch& b) {
  require_plane(b);
  if (branch_content_gcd(b) != 1) {
    throw Error(ErrorKind::InvalidBranch, "parameterization is not primitive (multiple branch)");
  }
}

int order_or_infinite(const Polynomial& p) {
  const auto ord = p.order();
  return ord ? *ord : kInfiniteOrder;
}

/// ord of F(other(t)) and the smallest order at which unknown tail terms of `other` can act.
std::pair<int, int> certified_valuation(const EliminationPolynomial& F, const Branch& other) {
  const auto curve = other.coordinates();
  const Polynomial along = F.evaluate_along(curve);
  if (along.is_zero()) {
    throw Error(ErrorKind::IndeterminateWithinTruncation,
                "branches coincide up to the stored terms (elimination polynomial vanishes identically)");
  }
  const int gradient_order = std::min(order_or_infinite(F.derivative_u().evaluate_along(curve)),
                                      order_or_infinite(F.derivative_v().evaluate_along(curve)));
  const int tail = other.truncation_order() + 1;
  const int reach = gradient_order == kInfiniteOrder ? 2 * tail : tail + std::min(gradient_order, tail);
  return {*along.order(), reach};
}

/// Power series inverse t(x) of x(t) = a t + ..., up to x^order.
Polynomial series_inverse(const Polynomial& x, int order) {
  const GaussianRational a_inv = x.coeff(1).inverse();
  const Polynomial identity = Polynomial::monomial(GaussianRational(1), 1);
  const Polynomial higher = x - Polynomial::monomial(x.coeff(1), 1);
  Polynomial t = identity * a_inv;
  for (int iter = 0; iter < order; ++iter) {
    t = ((identity - higher.compose(t)) * a_inv).truncated(static_cast<std::size_t>(order));
  }
  return t;
}

std::optional<int> graph_contact(const Branch& b1, const Branch& b2) {
  if (multiplicity(b1) != 1 || multiplicity(b2) != 1) return std::nullopt;
  const auto& v1 = b1.terms().front().coeff;
  const auto& v2 = b2.terms().front().coeff;
  if (!(v1[0] * v2[1] - v1[1] * v2[0]).is_zero()) return 1;

  const int axis = v1[0].is_zero() ? 1 : 0;
  const int order = std::min(b1.truncation_order(), b2.truncation_order());
  auto graph = [&](const Branch& b) {
    const Polynomial t = series_inverse(b.coordinate(axis), order);
    return b.coordinate(1 - axis).compose(t).truncated(static_cast<std::size_t>(order));
  };
  const Polynomial difference = graph(b1) - graph(b2);
  if (difference.is_zero()) {
    throw Error(ErrorKind::IndeterminateWithinTruncation,
                "graphs agree up to order " + std::to_string(order));
  }
  return *difference.order();
}

}  // namespace

Polynomial EliminationPolynomial::evaluate_along(std::span<const Polynomial> curve) const {
  const Polynomial& u = curve[static_cast<std::size_t>(eliminated_coordinate)];
  const Polynomial& v = curve[static_cast<std::size_t>(1 - eliminated_coordinate)];
  Polynomial acc;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= v;
    acc += it->compose(u);
  }
  return acc;
}

EliminationPolynomial EliminationPolynomial::derivative_u() const {
  EliminationPolynomial out{eliminated_coordinate, {}};
  for (const auto& c : coefficients) out.coefficients.push_back(c.derivative());
  return out;
}

EliminationPolynomial EliminationPolynomial::derivative_v() const {
  EliminationPolynomial out{eliminated_coordinate, {}};
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    out.coefficients.push_back(coefficients[i] * GaussianRational(static_cast<long long>(i)));
  }
  return out;
}

EliminationPolynomial elimination_polynomial(const Branch& b) {
  require_plane(b);
  const auto coords = b.coordinates();
  if (!Polynomial::gcd(coords[0], coords[1]).is_zero()) {
    const Polynomial g = Polynomial::gcd(coords[0], coords[1]);
    if (g.degree() != *g.order()) {
      throw Error(ErrorKind::IndeterminateWithinTruncation,
                  "the truncated parameterization returns to the origin at a nonzero parameter");
    }
  }
  // Eliminate through the coordinate of smaller degree; the quotient ring has that rank.
  int e = -1;
  for (int j = 0; j < 2; ++j) {
    if (coords[static_cast<std::size_t>(j)].is_zero()) continue;
    if (e < 0 || coords[static_cast<std::size_t>(j)].degree() < coords[static_cast<std::size_t>(e)].degree()) e = j;
  }
  const Polynomial& X = coords[static_cast<std::size_t>(e)];
  const Polynomial& Y = coords[static_cast<std::size_t>(1 - e)];
  const auto D = static_cast<std::size_t>(X.degree());

  // Column j of K is s^j * Y(s) reduced modulo X(s) = u.
  PolyMatrix K(D, std::vector<Polynomial>(D));
  for (std::size_t j = 0; j < D; ++j) {
    std::vector<Polynomial> element(j + static_cast<std::size_t>(std::max(Y.degree(), 0)) + 1);
    for (std::size_t m = 0; m < Y.coeffs().size(); ++m) {
      if (!Y.coeffs()[m].is_zero()) element[j + m] = Polynomial::constant(Y.coeffs()[m]);
    }
    if (element.size() < D) element.resize(D);
    const auto reduced = reduce_mod(std::move(element), X);
    for (std::size_t i = 0; i < D; ++i) K[i][j] = reduced[i];
  }
  return {e, characteristic_polynomial(K)};
}

IntersectionReport intersection_report(const Branch& b1, const Branch& b2) {
  require_intersection_input(b1);
  require_intersection_input(b2);

  const auto [forward, forward_reach] = certified_valuation(elimination_polynomial(b2), b1);
  const auto [backward, backward_reach] = certified_valuation(elimination_polynomial(b1), b2);
  if (forward >= forward_reach || backward >= backward_reach) {
    throw Error(ErrorKind::IndeterminateWithinTruncation,
                "intersection order " + std::to_string(forward) + " reaches the unknown tail terms");
  }
  if (forward != backward) {
    throw std::logic_error("intersection valuations disagree: " + std::to_string(forward) + " vs " +
                           std::to_string(backward));
  }

  IntersectionReport report;
  report.multiplicity = forward;
  report.forward_valuation = forward;
  report.backward_valuation = backward;
  report.graph_contact = graph_contact(b1, b2);
  if (report.graph_contact && *report.graph_contact != forward) {
    throw std::logic_error("graph contact order " + std::to_string(*report.graph_contact) +
                           " disagrees with elimination valuation " + std::to_string(forward));
  }
  return report;
}

int intersection_multiplicity(const Branch& b1, const Branch& b2) {
  return intersection_report(b1, b2).multiplicity;
}

}  // namespace pseudocurve
