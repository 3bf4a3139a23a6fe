#include "bmat/lcp.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <fmt/core.h>

#include "bmat/error.hpp"

namespace bmat {
namespace {

void CheckDimension(std::size_t n) {
  if (n > kMaxLcpDimension) {
    throw Error(ErrorKind::kDimensionTooLarge,
                fmt::format("support enumeration supports n <= {}, got n = {}", kMaxLcpDimension,
                            n));
  }
}

// Candidate x for support `mask`, or nothing when the block is singular or
// the candidate is infeasible.
std::optional<Vector> TrySupport(const LcpInstance& inst, std::size_t mask) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (std::size_t{1} << i)) s.push_back(i);
  }
  Vector x(n, 0.0);
  if (!s.empty()) {
    const LuFactorization lu(inst.m().principal_submatrix(s));
    if (lu.is_singular()) return std::nullopt;
    Vector rhs(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) rhs[a] = -inst.q()[s[a]];
    const Vector xs = lu.solve(rhs);
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (xs[a] < -kLcpFeasibilityTol) return std::nullopt;
      x[s[a]] = xs[a];
    }
  }
  const Vector w = inst.m().multiply(x);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (std::size_t{1} << i)) continue;
    if (w[i] + inst.q()[i] < -kLcpFeasibilityTol) return std::nullopt;
  }
  return x;
}

}  // namespace

LcpInstance::LcpInstance(SquareMatrix m, Vector q) : m_(std::move(m)), q_(std::move(q)) {
  if (q_.size() != m_.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("q has length {} but M is {}x{}", q_.size(), m_.size(), m_.size()));
  }
}

std::vector<std::vector<std::size_t>> accepted_supports(const LcpInstance& inst) {
  const std::size_t n = inst.size();
  CheckDimension(n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!TrySupport(inst, mask)) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

LcpSolution solve_enumeration(const LcpInstance& inst) {
  const std::size_t n = inst.size();
  CheckDimension(n);
  if (n <= kMaxPMatrixDimension && !is_p_matrix_bruteforce(inst.m())) {
    throw Error(ErrorKind::kNoSolutionFound,
                "M is not a P-matrix; the LCP need not have a unique solution");
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    auto x = TrySupport(inst, mask);
    if (!x) continue;
    Vector w = inst.m().multiply(*x);
    for (std::size_t i = 0; i < n; ++i) w[i] += inst.q()[i];
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i] > 0.0) support.push_back(i);
    }
    return LcpSolution{std::move(*x), std::move(w), std::move(support)};
  }
  throw Error(ErrorKind::kNoSolutionFound, "no complementary support produced a feasible point");
}

Vector residual(const LcpInstance& inst, std::span<const double> x) {
  Vector w = inst.m().multiply(x);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::min(x[i], w[i] + inst.q()[i]);
  return w;
}

ErrorBoundCheck validate_error_bound(const LcpInstance& inst, std::span<const double> x,
                                     double bound) {
  const double rhs = bound * inf_norm(residual(inst, x));
  const LcpSolution sol = solve_enumeration(inst);
  Vector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - sol.x_star[i];
  const double lhs = inf_norm(diff);
  return ErrorBoundCheck{lhs, rhs, lhs <= rhs + 1e-9};
}

}  // namespace bmat
