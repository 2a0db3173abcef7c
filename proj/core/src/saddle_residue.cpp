#include "pseudocurve/saddle_residue.hpp"

#include "pseudocurve/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace pseudocurve {

ResidueForm::ResidueForm(int k, int l, Polynomial p) : k_(k), l_(l), p_(std::move(p)) {
  if (k_ < 1) throw Error(ErrorKind::DomainError, "k must be positive");
  if (l_ < 0 || l_ >= k_) throw Error(ErrorKind::DomainError, "l must satisfy 0 <= l < k");
  if (p_.degree() > k_ - l_ - 1) {
    throw Error(ErrorKind::DomainError, "deg P must be at most k - l - 1 = " + std::to_string(k_ - l_ - 1));
  }
  if (p_.coeff(0).is_zero()) throw Error(ErrorKind::DomainError, "P(0) must be nonzero");
}

RationalMatrix residue_form_matrix(const ResidueForm& f) {
  const int k = f.k();
  const int top = k - f.l() - 1;  // residue picks the z^top coefficient of P W^2
  const auto n = static_cast<std::size_t>(f.dimension());
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  const auto x = [](int i) { return static_cast<std::size_t>(2 * i); };
  const auto y = [](int i) { return static_cast<std::size_t>(2 * i + 1); };
  const Rational half(1, 2);

  for (int r = 0; r <= top; ++r) {
    const GaussianRational a = f.p().coeff(static_cast<std::size_t>(r));
    if (a.is_zero()) continue;
    const int s = top - r;
    // Re(a w_i w_j) = re(a)(x_i x_j - y_i y_j) - im(a)(x_i y_j + y_i x_j) over ordered pairs i + j = s.
    for (int i = 0; i <= s && i <= k; ++i) {
      const int j = s - i;
      if (j > k) continue;
      m[x(i)][x(j)] += a.re();
      m[y(i)][y(j)] -= a.re();
      const Rational b = a.im() * half;
      m[x(i)][y(j)] -= b;
      m[y(j)][x(i)] -= b;
      m[y(i)][x(j)] -= b;
      m[x(j)][y(i)] -= b;
    }
  }
  return m;
}

InertiaResult symmetric_inertia(RationalMatrix m) {
  InertiaResult out;
  std::vector<std::size_t> live(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) live[i] = i;

  auto eliminate = [&](std::span<const std::size_t> pivots) {
    // Schur complement update of the remaining rows against a 1x1 or 2x2 pivot block.
    std::vector<std::size_t> rest;
    for (auto r : live) {
      if (std::find(pivots.begin(), pivots.end(), r) == pivots.end()) rest.push_back(r);
    }
    if (pivots.size() == 1) {
      const std::size_t p = pivots[0];
      for (auto r : rest) {
        if (m[r][p] == 0) continue;
        const Rational factor = m[r][p] / m[p][p];
        for (auto c : rest) m[r][c] -= factor * m[p][c];
      }
    } else {
      const std::size_t p = pivots[0];
      const std::size_t q = pivots[1];
      const Rational det = m[p][p] * m[q][q] - m[p][q] * m[q][p];
      // Inverse of [[a, b], [b, d]] is [[d, -b], [-b, a]] / det.
      const Rational ia = m[q][q] / det;
      const Rational ib = -m[p][q] / det;
      const Rational id = m[p][p] / det;
      std::vector<Rational> up(rest.size());
      std::vector<Rational> uq(rest.size());
      for (std::size_t t = 0; t < rest.size(); ++t) {
        up[t] = ia * m[rest[t]][p] + ib * m[rest[t]][q];
        uq[t] = ib * m[rest[t]][p] + id * m[rest[t]][q];
      }
      for (std::size_t t = 0; t < rest.size(); ++t) {
        if (up[t] == 0 && uq[t] == 0) continue;
        for (auto c : rest) m[rest[t]][c] -= up[t] * m[p][c] + uq[t] * m[q][c];
      }
    }
    live = std::move(rest);
  };

  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return m[i][i] != 0; });
    if (diag != live.end()) {
      const std::size_t p = *diag;
      (m[p][p] > 0 ? out.ind_plus : out.ind_minus) += 1;
      const std::size_t pivot[] = {p};
      eliminate(pivot);
      continue;
    }
    bool found = false;
    for (std::size_t a = 0; a < live.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < live.size() && !found; ++b) {
        if (m[live[a]][live[b]] != 0) {
          // Zero diagonal: [[0, c], [c, 0]] contributes one positive and one negative square.
          out.ind_plus += 1;
          out.ind_minus += 1;
          const std::size_t pivot[] = {live[a], live[b]};
          eliminate(pivot);
          found = true;
        }
      }
    }
    if (!found) {
      out.nullity += static_cast<int>(live.size());
      live.clear();
    }
  }
  out.s_ind = std::min(out.ind_plus, out.ind_minus);
  return out;
}

InertiaResult inertia(const ResidueForm& f) { return symmetric_inertia(residue_form_matrix(f)); }

namespace {

/// Eigenvalues of the residue matrix and the entry scale max(1, max |entry|).
std::pair<std::vector<double>, double> spectrum(const ResidueForm& f) {
  const auto m = residue_form_matrix(f);
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = static_cast<double>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      scale = std::max(scale, std::abs(a(i, j)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {std::vector<double>(ev.data(), ev.data() + ev.size()), scale};
}

}  // namespace

InertiaResult inertia_floating(const ResidueForm& f, double tol) {
  const auto [eigenvalues, scale] = spectrum(f);
  InertiaResult out;
  for (double ev : eigenvalues) {
    if (ev > tol * scale) {
      ++out.ind_plus;
    } else if (ev < -tol * scale) {
      ++out.ind_minus;
    } else {
      ++out.nullity;
    }
  }
  out.s_ind = std::min(out.ind_plus, out.ind_minus);
  return out;
}

bool floating_inertia_consistent(const ResidueForm& f, const InertiaResult& exact, double tol) {
  auto [eigenvalues, scale] = spectrum(f);
  if (static_cast<int>(eigenvalues.size()) != exact.ind_plus + exact.ind_minus + exact.nullity) return false;
  std::sort(eigenvalues.begin(), eigenvalues.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  const auto null = static_cast<std::size_t>(exact.nullity);
  int plus = 0;
  int minus = 0;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (i < null) {
      if (std::abs(eigenvalues[i]) > tol * scale) return false;
    } else {
      (eigenvalues[i] > 0.0 ? plus : minus) += 1;
    }
  }
  return plus == exact.ind_plus && minus == exact.ind_minus;
}

bool a0_equivalence_check(const ResidueForm& f) {
  const ResidueForm reduced(f.k(), f.l(), Polynomial::constant(f.p().coeff(0)));
  return inertia(f) == inertia(reduced);
}

int saddle_index_at_cusp(int k, int l, int nu) {
  if (k < 1) throw Error(ErrorKind::DomainError, "cusp order must be positive");
  if (l < 0 || l > k) throw Error(ErrorKind::DomainError, "secondary index must satisfy 0 <= l <= k");
  if (nu < 0) throw Error(ErrorKind::DomainError, "vanishing order must be non-negative");
  return std::max(0, k - l - nu);
}

int total_saddle_index(std::span<const CuspSaddleData> cusps) {
  int total = 0;
  for (const auto& c : cusps) total += saddle_index_at_cusp(c.k, c.l, c.nu);
  return total;
}

}  // namespace pseudocurve
