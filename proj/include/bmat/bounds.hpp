#pragma once

// Upper bounds on max_{d in [0,1]^n} ||(I - D + D M)^{-1}||_inf for a
// B-matrix M, where D = diag(d). Three bounds are provided, all built on the
// split M = B+ + C (see split_b_plus):
//
//   bound_gep  (n-1) / min(beta, 1),
//              beta = min_i (b_ii - sum_{j != i} |b_ij|).
//
//   bound_li   sum_i (n-1) / min(beta_bar_i, 1) * prod_{j<i} b_jj / beta_bar_j,
//              beta_bar_i = b_ii - sum_{j>i} |b_ij| * l_i(B+).
//
//   bound_new  sum_i (n-1) / min(beta_hat_i, 1) * prod_{j<i} b_jj / beta_bar_j,
//              beta_hat_i = b_ii - sum_{k>i} |b_ik| * m_tilde_ki(B+).
//
// bound_new <= bound_li always holds. bound_new < bound_gep is guaranteed
// when either condition reported by check_sharpness_conditions holds; neither
// of bound_gep and bound_new dominates the other in general.
//
// Empty sums are zero and empty products are one, so beta_bar_n = beta_hat_n
// = b_nn. Products that overflow propagate +inf, which is still a valid
// (if useless) upper bound.

#include <cstddef>

#include "bmat/matrix.hpp"

namespace bmat {

// Row-wise quantities of a row SDD matrix A with positive diagonal. All
// vectors and matrices are 0-based; diagonal entries of w_pair and m_pair are
// unused and left at zero.
//
//   w_pair(i,j) = |a_ij| / (|a_ii| - sum_{k>j, k != i} |a_ik|)        i != j
//   w(i)        = max_{j != i} w_pair(i,j)                            (0 if n = 1)
//   m_pair(i,j) = (|a_ij| + sum_{k>j, k != i} |a_ik| w(k)) / |a_ii|   i != j
//   u(i)        = sum_{j>i} |a_ij| / |a_ii|
//   l(k)        = max_{i >= k} sum_{j >= k, j != i} |a_ij| / |a_ii|
struct YangQuantities {
  Vector w;
  SquareMatrix w_pair;
  SquareMatrix m_pair;
  Vector u;
  Vector l;
};

// Throws NotSDD unless `a` is SDD with a positive diagonal.
YangQuantities compute_yang_quantities(const SquareMatrix& a);

// The d-free majorant of w_i(I - D + D B+):
//   max_{h != k} |b_kh| / (b_kk - sum_{l>h, l != k} |b_kl|).
// Throws NotSDD.
Vector compute_w_majorant(const SquareMatrix& b_plus);

// m_tilde(i,j) = (|b_ij| + sum_{k>j, k != i} |b_ik| * w_majorant(k)) / b_ii,
// which dominates m_ij(I - D + D B+) for every d in [0,1]^n. Throws NotSDD.
SquareMatrix compute_m_tilde(const SquareMatrix& b_plus);

// Upper bound on ||A^{-1}||_inf for an SDD M-matrix A:
//   sum_i 1 / (a_ii - sum_{k>i} |a_ik| m_pair(k,i)) * prod_{j<i} 1 / (1 - u_j l_j).
// Throws NotSddMMatrix.
double yang_inverse_norm_bound(const SquareMatrix& a);

struct BoundQuantities {
  double beta;         // min_i beta_i
  Vector beta_i;       // b_ii - sum_{j != i} |b_ij|
  Vector beta_bar;
  Vector beta_hat;
  Vector l;            // l_k(B+)
  SquareMatrix m_tilde;
  double alpha;        // sum_i prod_{j<i} b_jj / beta_bar_j
  double beta_hat_min;
  double bound_gep;
  double bound_li;
  double bound_new;
};

// Throws DimensionTooSmall for n = 1 and NotBMatrix when the reconstructed
// matrix B+ + C fails is_b_matrix(., tol).
BoundQuantities compute_bound_quantities(const BPlusSplit& split, double tol = kDefaultTol);

double compute_bound_gep(const BPlusSplit& split, double tol = kDefaultTol);
double compute_bound_li(const BPlusSplit& split, double tol = kDefaultTol);
double compute_bound_new(const BPlusSplit& split, double tol = kDefaultTol);

// Sufficient conditions for bound_new < bound_gep.
struct SharpnessConditions {
  bool cond_i = false;   // beta_hat_min > 1 and alpha < 1 / beta
  bool cond_ii = false;  // beta_hat_min < 1 and alpha * beta < beta_hat_min
  bool new_beats_gep_guaranteed = false;
};

// Strict floating comparisons throughout.
SharpnessConditions check_sharpness_conditions(const BoundQuantities& q);

}  // namespace bmat
