#pragma once

#include <cstddef>
#include <vector>

#include "bmat/matrix.hpp"

namespace bmat {

// LCP(M, q): find x >= 0 with w = M x + q >= 0 and x^T w = 0.
class LcpInstance {
 public:
  // Throws DimensionMismatch if q.size() != m.size().
  LcpInstance(SquareMatrix m, Vector q);

  const SquareMatrix& m() const { return m_; }
  const Vector& q() const { return q_; }
  std::size_t size() const { return q_.size(); }

 private:
  SquareMatrix m_;
  Vector q_;
};

struct LcpSolution {
  Vector x_star;
  Vector w_star;                     // M x* + q
  std::vector<std::size_t> support;  // indices with x*_i > 0
};

inline constexpr double kLcpFeasibilityTol = 1e-10;
inline constexpr double kLcpComplementarityTol = 1e-9;
inline constexpr std::size_t kMaxLcpDimension = 20;

// Index sets S (as bitmask order, bit i <-> index i) for which solving
// M_SS x_S = -q_S with x = 0 off S gives x_S >= -tol and (Mx+q)_i >= -tol
// off S. Singular principal blocks are skipped. Throws DimensionTooLarge.
std::vector<std::vector<std::size_t>> accepted_supports(const LcpInstance& inst);

// Exhaustive support enumeration; returns the solution of the first accepted
// support. For n <= 15 the P-matrix property is verified first. Throws
// DimensionTooLarge for n > 20 and NoSolutionFound when M is not a P-matrix
// or no support is accepted.
LcpSolution solve_enumeration(const LcpInstance& inst);

// Componentwise min(x, M x + q).
Vector residual(const LcpInstance& inst, std::span<const double> x);

struct ErrorBoundCheck {
  double lhs;  // ||x - x*||_inf
  double rhs;  // bound * ||r(x)||_inf
  bool holds;  // lhs <= rhs + 1e-9
};

ErrorBoundCheck validate_error_bound(const LcpInstance& inst, std::span<const double> x,
                                     double bound);

}  // namespace bmat
