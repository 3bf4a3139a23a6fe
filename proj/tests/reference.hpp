#pragma once

// Test-only reference evaluations. Everything here works in long double on
// nested vectors and never calls into the library's numeric routines, so it
// can serve as an independent check of them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bmat/matrix.hpp"

namespace bmat::reference {

using Real = long double;
using Mat = std::vector<std::vector<Real>>;

inline Mat ToMat(const SquareMatrix& m) {
  Mat out(m.size(), std::vector<Real>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

// Gauss-Jordan with full pivoting.
inline Mat Inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<Real>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  std::vector<std::size_t> col_of(n);
  for (std::size_t i = 0; i < n; ++i) col_of[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::fabs(a[i][j]) > std::fabs(a[pr][pc])) pr = i, pc = j;
    std::swap(a[k], a[pr]);
    std::swap(inv[k], inv[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    std::swap(col_of[k], col_of[pc]);
    const Real p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) a[k][j] /= p, inv[k][j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Real f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j], inv[i][j] -= f * inv[k][j];
    }
  }
  // Column swaps permute the rows of the inverse.
  Mat out(n);
  for (std::size_t k = 0; k < n; ++k) out[col_of[k]] = inv[k];
  return out;
}

inline Real InfNorm(const Mat& a) {
  Real best = 0;
  for (const auto& row : a) {
    Real s = 0;
    for (Real v : row) s += std::fabs(v);
    best = std::max(best, s);
  }
  return best;
}

inline Real InverseInfNorm(const SquareMatrix& m) { return InfNorm(Inverse(ToMat(m))); }

struct Bounds {
  Real beta;
  std::vector<Real> beta_bar, beta_hat;
  Real gep, li, fresh;
};

// Literal transcription of the three bounds with 1-based index arithmetic.
inline Bounds ComputeBounds(const SquareMatrix& m_in) {
  const Mat m = ToMat(m_in);
  const std::size_t n = m.size();
  auto M = [&](std::size_t i, std::size_t j) { return m[i - 1][j - 1]; };
  std::vector<Real> r(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (j != i) r[i] = std::max(r[i], M(i, j));
  auto b = [&](std::size_t i, std::size_t j) { return M(i, j) - r[i]; };
  auto ab = [&](std::size_t i, std::size_t j) { return std::fabs(b(i, j)); };

  Bounds out{};
  out.beta = 1e300L;
  for (std::size_t i = 1; i <= n; ++i) {
    Real s = 0;
    for (std::size_t j = 1; j <= n; ++j)
      if (j != i) s += ab(i, j);
    out.beta = std::min(out.beta, b(i, i) - s);
  }
  auto l = [&](std::size_t k) {
    Real best = 0;
    for (std::size_t i = k; i <= n; ++i) {
      Real s = 0;
      for (std::size_t j = k; j <= n; ++j)
        if (j != i) s += ab(i, j);
      best = std::max(best, s / b(i, i));
    }
    return best;
  };
  auto w_major = [&](std::size_t k) {
    Real best = 0;
    for (std::size_t h = 1; h <= n; ++h) {
      if (h == k) continue;
      Real s = 0;
      for (std::size_t q = h + 1; q <= n; ++q)
        if (q != k) s += ab(k, q);
      best = std::max(best, ab(k, h) / (b(k, k) - s));
    }
    return best;
  };
  auto m_tilde = [&](std::size_t i, std::size_t j) {
    Real s = ab(i, j);
    for (std::size_t k = j + 1; k <= n; ++k)
      if (k != i) s += ab(i, k) * w_major(k);
    return s / b(i, i);
  };
  out.beta_bar.assign(n + 1, 0);
  out.beta_hat.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    Real tail = 0, hat = 0;
    for (std::size_t j = i + 1; j <= n; ++j) tail += ab(i, j);
    for (std::size_t k = i + 1; k <= n; ++k) hat += ab(i, k) * m_tilde(k, i);
    out.beta_bar[i] = b(i, i) - tail * l(i);
    out.beta_hat[i] = b(i, i) - hat;
  }
  const Real scale = static_cast<Real>(n - 1);
  out.gep = scale / std::min<Real>(out.beta, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    Real prod = 1;
    for (std::size_t j = 1; j < i; ++j) prod *= b(j, j) / out.beta_bar[j];
    out.li += scale / std::min<Real>(out.beta_bar[i], 1) * prod;
    out.fresh += scale / std::min<Real>(out.beta_hat[i], 1) * prod;
  }
  out.beta_bar.erase(out.beta_bar.begin());
  out.beta_hat.erase(out.beta_hat.begin());
  return out;
}

}  // namespace bmat::reference
