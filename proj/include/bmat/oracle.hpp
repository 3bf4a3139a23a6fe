#pragma once

#include <cstddef>
#include <cstdint>

#include "bmat/matrix.hpp"

namespace bmat {

// Sampling of the d-cube used to estimate max_d ||(I - D + D M)^{-1}||_inf
// from below. Sample sets are evaluated in the order vertices, grid, random.
struct OracleConfig {
  std::size_t grid_steps = 4;  // per-axis points are 0, 1/g, ..., 1
  bool include_grid = true;
  bool include_vertices = true;
  std::size_t random_samples = 0;
  std::uint64_t rng_seed = 0x5eed;
};

struct OracleResult {
  double max_norm_found = 0.0;
  DScaling argmax_d{Vector{}};
  std::size_t samples_evaluated = 0;
  bool vertices_skipped = false;  // n exceeded kMaxVertexDimension
};

inline constexpr std::size_t kMaxOracleSamples = 10'000'000;
inline constexpr std::size_t kMaxVertexDimension = 12;

// Number of points the configuration would evaluate for dimension n,
// saturating at SIZE_MAX.
std::size_t oracle_sample_count(std::size_t n, const OracleConfig& cfg);

// Deterministic given cfg. Ties on the norm go to the lexicographically
// smallest d. Throws NotBMatrix, SampleBudgetExceeded, and
// ParameterOutOfRange for an enabled grid with grid_steps = 0.
OracleResult sample_max_norm(const SquareMatrix& m, const OracleConfig& cfg,
                             double tol = kDefaultTol);

}  // namespace bmat
