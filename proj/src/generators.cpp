#include "bmat/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/core.h>

#include "bmat/error.hpp"

namespace bmat {
namespace {

void RequireDimension(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::kParameterOutOfRange, fmt::format("n must be at least 2, got {}", n));
  }
}

}  // namespace

SquareMatrix make_example1(double k) {
  if (!(k >= 1.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::kParameterOutOfRange, fmt::format("example1 needs k >= 1, got {}", k));
  }
  return SquareMatrix::FromRows({
      {1.5, 0.5, 0.4, 0.5},
      {-0.1, 1.7, 0.7, 0.6},
      {0.8, -0.1 * k / (k + 1.0), 1.8, 0.7},
      {0.0, 0.7, 0.8, 1.8},
  });
}

SquareMatrix make_example2(double a, double k) {
  const double a_min = (std::sqrt(5.0) - 1.0) / 2.0;
  if (!(a > a_min && a < 1.0)) {
    throw Error(ErrorKind::kParameterOutOfRange,
                fmt::format("example2 needs {:.6f} < a < 1, got a = {}", a_min, a));
  }
  const double k_min = (2.0 - a * a) / (1.0 + a);
  if (!(k > k_min && k < 1.0)) {
    throw Error(ErrorKind::kParameterOutOfRange,
                fmt::format("example2 with a = {} needs {:.6f} < k < 1, got k = {}", a, k_min, k));
  }
  return SquareMatrix::FromRows({{1.0 / k, -a / k}, {0.0, 1.0 / k}});
}

SquareMatrix make_random_b(std::size_t n, std::uint64_t seed, bool near_singular) {
  RequireDimension(n);
  const double margin = near_singular ? 1e-3 : 0.05;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_real_distribution<double> extra(0.0, 0.5);

  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) m(i, j) = entry(rng);
    }
  }
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double off_sum = 0.0;
    double off_max = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      off_sum += m(i, j);
      off_max = std::max(off_max, m(i, j));
    }
    // row_sum >= margin and row_sum / n - off_max >= margin.
    double diag = std::max(margin - off_sum, nd * (off_max + margin) - off_sum);
    // Round-off in the row sum can eat a sliver of the margin; 1% slack keeps
    // the result clear of any classification tolerance.
    diag += 0.01 * margin;
    if (!near_singular) diag += extra(rng);
    m(i, i) = diag;
  }
  return m;
}

SquareMatrix make_random_sdd_m_matrix(std::size_t n, std::uint64_t seed) {
  RequireDimension(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-1.0, 0.0);
  std::uniform_real_distribution<double> slack(0.01, 1.0);
  std::bernoulli_distribution keep(0.7);

  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    double mass = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double v = entry(rng);
      m(i, j) = keep(rng) ? v : 0.0;
      mass -= m(i, j);
    }
    m(i, i) = mass + slack(rng);
  }
  return m;
}

SquareMatrix make_matrix(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kExample1: return make_example1(spec.k);
    case Family::kExample2: return make_example2(spec.a, spec.k);
    case Family::kRandomB: return make_random_b(spec.n, spec.seed, spec.near_singular);
  }
  throw Error(ErrorKind::kParameterOutOfRange, "unknown family");
}

}  // namespace bmat
