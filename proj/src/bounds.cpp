#include "bmat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/core.h>

#include "bmat/error.hpp"

namespace bmat {
namespace {

void RequireSddPositiveDiagonal(const SquareMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a(i, i) > 0.0)) {
      throw Error(ErrorKind::kNotSdd, fmt::format("diagonal entry {} is not positive", i + 1));
    }
  }
  if (const auto row = find_sdd_violation(a, 0.0)) {
    throw Error(ErrorKind::kNotSdd,
                fmt::format("row {} is not strictly diagonally dominant", *row + 1));
  }
}

// sum_{k > j, k != i} |a_ik|
double TailSumExcluding(const SquareMatrix& a, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t k = j + 1; k < a.size(); ++k) {
    if (k != i) s += std::abs(a(i, k));
  }
  return s;
}

// sum_{j > i} |a_ij|
double UpperRowSum(const SquareMatrix& a, std::size_t i) {
  double s = 0.0;
  for (std::size_t j = i + 1; j < a.size(); ++j) s += std::abs(a(i, j));
  return s;
}

Vector ComputeL(const SquareMatrix& a) {
  const std::size_t n = a.size();
  Vector l(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double best = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k; j < n; ++j) {
        if (j != i) s += std::abs(a(i, j));
      }
      best = std::max(best, s / std::abs(a(i, i)));
    }
    l[k] = best;
  }
  return l;
}

// (|a_ij| + sum_{k>j, k != i} |a_ik| w_k) / |a_ii| for all i != j.
SquareMatrix PairwiseM(const SquareMatrix& a, const Vector& w) {
  const std::size_t n = a.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double s = std::abs(a(i, j));
      for (std::size_t k = j + 1; k < n; ++k) {
        if (k != i) s += std::abs(a(i, k)) * w[k];
      }
      m(i, j) = s / std::abs(a(i, i));
    }
  }
  return m;
}

}  // namespace

YangQuantities compute_yang_quantities(const SquareMatrix& a) {
  RequireSddPositiveDiagonal(a);
  const std::size_t n = a.size();

  SquareMatrix w_pair(n);
  Vector w(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      w_pair(i, j) = std::abs(a(i, j)) / (std::abs(a(i, i)) - TailSumExcluding(a, i, j));
      w[i] = std::max(w[i], w_pair(i, j));
    }
  }

  Vector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = UpperRowSum(a, i) / std::abs(a(i, i));

  SquareMatrix m_pair = PairwiseM(a, w);
  return YangQuantities{std::move(w), std::move(w_pair), std::move(m_pair), std::move(u),
                        ComputeL(a)};
}

Vector compute_w_majorant(const SquareMatrix& b_plus) {
  RequireSddPositiveDiagonal(b_plus);
  const std::size_t n = b_plus.size();
  Vector majorant(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t h = 0; h < n; ++h) {
      if (h == k) continue;
      majorant[k] = std::max(majorant[k], std::abs(b_plus(k, h)) /
                                              (b_plus(k, k) - TailSumExcluding(b_plus, k, h)));
    }
  }
  return majorant;
}

SquareMatrix compute_m_tilde(const SquareMatrix& b_plus) {
  return PairwiseM(b_plus, compute_w_majorant(b_plus));
}

double yang_inverse_norm_bound(const SquareMatrix& a) {
  if (!is_sdd_m_matrix(a, 0.0)) {
    throw Error(ErrorKind::kNotSddMMatrix, "matrix is not a strictly diagonally dominant M-matrix");
  }
  const YangQuantities yq = compute_yang_quantities(a);
  const std::size_t n = a.size();
  double total = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = i + 1; k < n; ++k) s += std::abs(a(i, k)) * yq.m_pair(k, i);
    total += product / (a(i, i) - s);
    product /= 1.0 - yq.u[i] * yq.l[i];
  }
  return total;
}

BoundQuantities compute_bound_quantities(const BPlusSplit& split, double tol) {
  const std::size_t n = split.size();
  if (n < 2) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "bounds need n >= 2 (the (n-1) factor vanishes for n = 1)");
  }
  if (const auto v = find_b_matrix_violation(split.reconstruct(), tol)) {
    throw Error(ErrorKind::kNotBMatrix, fmt::format("not a B-matrix (row {})", v->row + 1));
  }
  const SquareMatrix& b = split.b_plus;
  try {
    RequireSddPositiveDiagonal(b);
  } catch (const Error& e) {
    throw Error(ErrorKind::kNotBMatrix, fmt::format("B+ is not SDD: {}", e.what()));
  }

  Vector beta_i(n);
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += std::abs(b(i, j));
    }
    beta_i[i] = b(i, i) - off;
  }
  const double beta = *std::min_element(beta_i.begin(), beta_i.end());

  Vector l = ComputeL(b);
  SquareMatrix m_tilde = compute_m_tilde(b);

  Vector beta_bar(n);
  Vector beta_hat(n);
  for (std::size_t i = 0; i < n; ++i) {
    beta_bar[i] = b(i, i) - UpperRowSum(b, i) * l[i];
    double s = 0.0;
    for (std::size_t k = i + 1; k < n; ++k) s += std::abs(b(i, k)) * m_tilde(k, i);
    beta_hat[i] = b(i, i) - s;
  }

  const double scale = static_cast<double>(n - 1);
  double alpha = 0.0;
  double bound_li = 0.0;
  double bound_new = 0.0;
  double product = 1.0;  // prod_{j<i} b_jj / beta_bar_j
  for (std::size_t i = 0; i < n; ++i) {
    alpha += product;
    bound_li += scale / std::min(beta_bar[i], 1.0) * product;
    bound_new += scale / std::min(beta_hat[i], 1.0) * product;
    product *= b(i, i) / beta_bar[i];
  }

  const double beta_hat_min = *std::min_element(beta_hat.begin(), beta_hat.end());
  return BoundQuantities{
      .beta = beta,
      .beta_i = std::move(beta_i),
      .beta_bar = std::move(beta_bar),
      .beta_hat = std::move(beta_hat),
      .l = std::move(l),
      .m_tilde = std::move(m_tilde),
      .alpha = alpha,
      .beta_hat_min = beta_hat_min,
      .bound_gep = scale / std::min(beta, 1.0),
      .bound_li = bound_li,
      .bound_new = bound_new,
  };
}

double compute_bound_gep(const BPlusSplit& split, double tol) {
  return compute_bound_quantities(split, tol).bound_gep;
}

double compute_bound_li(const BPlusSplit& split, double tol) {
  return compute_bound_quantities(split, tol).bound_li;
}

double compute_bound_new(const BPlusSplit& split, double tol) {
  return compute_bound_quantities(split, tol).bound_new;
}

SharpnessConditions check_sharpness_conditions(const BoundQuantities& q) {
  SharpnessConditions c;
  c.cond_i = q.beta_hat_min > 1.0 && q.alpha < 1.0 / q.beta;
  c.cond_ii = q.beta_hat_min < 1.0 && q.alpha * q.beta < q.beta_hat_min;
  c.new_beats_gep_guaranteed = c.cond_i || c.cond_ii;
  return c;
}

}  // namespace bmat
