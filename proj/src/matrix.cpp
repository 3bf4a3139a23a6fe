#include "bmat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <fmt/core.h>

#include "bmat/error.hpp"

namespace bmat {

SquareMatrix::SquareMatrix(std::size_t n) : SquareMatrix(n, std::vector<double>(n * n, 0.0)) {}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw Error(ErrorKind::kDimensionTooSmall, "matrix dimension must be at least 1");
  }
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("expected {} entries for a {}x{} matrix, got {}", n_ * n_, n_, n_,
                            entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k])) {
      throw Error(ErrorKind::kNonFiniteEntry,
                  fmt::format("entry ({}, {}) is not finite", k / n_ + 1, k % n_ + 1));
    }
  }
}

SquareMatrix SquareMatrix::Identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(ErrorKind::kDimensionMismatch, "rows must all have length equal to the row count");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return SquareMatrix(n, std::move(entries));
}

SquareMatrix SquareMatrix::Diagonal(std::span<const double> diag) {
  SquareMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

SquareMatrix SquareMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  SquareMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      sub(a, b) = (*this)(indices[a], indices[b]);
    }
  }
  return sub;
}

Vector SquareMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("vector length {} does not match matrix dimension {}", x.size(), n_));
  }
  Vector y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix dimensions differ");
  }
  std::vector<double> sum(a.entries_.size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a.entries_[k] + b.entries_[k];
  return SquareMatrix(a.n_, std::move(sum));
}

DScaling::DScaling(Vector d) : d_(std::move(d)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (!(d_[i] >= 0.0 && d_[i] <= 1.0)) {
      throw Error(ErrorKind::kParameterOutOfRange,
                  fmt::format("d[{}] = {} is outside [0, 1]", i, d_[i]));
    }
  }
}

std::optional<BMatrixViolation> find_b_matrix_violation(const SquareMatrix& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (double v : m.row(i)) row_sum += v;
    if (!(row_sum > tol)) {
      return BMatrixViolation{BMatrixViolation::Kind::kRowSumNotPositive, i, std::nullopt, row_sum,
                              0.0};
    }
    const double mean = row_sum / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!(mean - m(i, j) > tol)) {
        return BMatrixViolation{BMatrixViolation::Kind::kEntryNotBelowRowMean, i, j, row_sum,
                                m(i, j)};
      }
    }
  }
  return std::nullopt;
}

bool is_b_matrix(const SquareMatrix& m, double tol) {
  return !find_b_matrix_violation(m, tol).has_value();
}

std::optional<std::size_t> find_sdd_violation(const SquareMatrix& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += std::abs(m(i, j));
    }
    if (!(std::abs(m(i, i)) - off > tol)) return i;
  }
  return std::nullopt;
}

bool is_sdd(const SquareMatrix& m, double tol) { return !find_sdd_violation(m, tol).has_value(); }

bool is_sdd_m_matrix(const SquareMatrix& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m(i, i) > 0.0)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && m(i, j) > 0.0) return false;
    }
  }
  return is_sdd(m, tol);
}

bool is_p_matrix_bruteforce(const SquareMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxPMatrixDimension) {
    throw Error(ErrorKind::kDimensionTooLarge,
                fmt::format("principal-minor enumeration supports n <= {}, got n = {}",
                            kMaxPMatrixDimension, n));
  }
  std::vector<std::size_t> indices;
  indices.reserve(n);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    indices.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) indices.push_back(i);
    }
    if (!(LuFactorization(m.principal_submatrix(indices)).determinant() > 0.0)) return false;
  }
  return true;
}

BPlusSplit split_b_plus(const SquareMatrix& m) {
  const std::size_t n = m.size();
  Vector r_plus(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) r_plus[i] = std::max(r_plus[i], m(i, j));
    }
  }
  SquareMatrix b_plus(n);
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b_plus(i, j) = m(i, j) - r_plus[i];
      c(i, j) = r_plus[i];
    }
  }
  return BPlusSplit{std::move(b_plus), std::move(c), std::move(r_plus)};
}

SquareMatrix scaled_matrix(const SquareMatrix& m, const DScaling& d) {
  const std::size_t n = m.size();
  if (d.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("scaling has length {} but matrix dimension is {}", d.size(), n));
  }
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = d[i] * m(i, j);
    }
    out(i, i) += 1.0 - d[i];
  }
  return out;
}

LuFactorization::LuFactorization(const SquareMatrix& a)
    : lu_(a), perm_(a.size()), min_pivot_(std::numeric_limits<double>::infinity()) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
      sign_ = -sign_;
    }
    min_pivot_ = std::min(min_pivot_, best);
    // Exactly zero column below the diagonal: nothing to eliminate.
    if (best == 0.0) continue;
    const double pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu_(i, k) / pivot;
      lu_(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

double LuFactorization::determinant() const {
  double det = sign_;
  for (std::size_t i = 0; i < lu_.size(); ++i) det *= lu_(i, i);
  return det;
}

Vector LuFactorization::solve(std::span<const double> b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("right-hand side has length {}, expected {}", b.size(), n));
  }
  if (is_singular()) {
    throw Error(ErrorKind::kSingularMatrix,
                fmt::format("matrix is singular (pivot magnitude {:.3g})", min_pivot_));
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

SquareMatrix LuFactorization::inverse() const {
  const std::size_t n = lu_.size();
  SquareMatrix inv(n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Vector col = solve(e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double inf_norm(const SquareMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double s = 0.0;
    for (double v : m.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double inf_norm(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

SquareMatrix inverse(const SquareMatrix& m) { return LuFactorization(m).inverse(); }

double inverse_inf_norm(const SquareMatrix& m) { return inf_norm(inverse(m)); }

}  // namespace bmat
