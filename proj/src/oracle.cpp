#include "bmat/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include <fmt/core.h>

#include "bmat/error.hpp"

namespace bmat {
namespace {

std::size_t SaturatingAdd(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

std::size_t SaturatingPow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    r *= base;
  }
  return r;
}

class MaxTracker {
 public:
  explicit MaxTracker(const SquareMatrix& m) : m_(m) {}

  void Evaluate(const Vector& d) {
    const double norm = inverse_inf_norm(scaled_matrix(m_, DScaling(d)));
    ++count_;
    if (!has_best_ || norm > best_ ||
        (norm == best_ && std::lexicographical_compare(d.begin(), d.end(), best_d_.begin(),
                                                       best_d_.end()))) {
      has_best_ = true;
      best_ = norm;
      best_d_ = d;
    }
  }

  OracleResult Finish(bool vertices_skipped) && {
    return OracleResult{best_, DScaling(std::move(best_d_)), count_, vertices_skipped};
  }

 private:
  const SquareMatrix& m_;
  bool has_best_ = false;
  double best_ = 0.0;
  Vector best_d_;
  std::size_t count_ = 0;
};

// Odometer over {0, ..., base-1}^n.
bool Advance(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::size_t oracle_sample_count(std::size_t n, const OracleConfig& cfg) {
  std::size_t total = cfg.random_samples;
  if (cfg.include_vertices && n <= kMaxVertexDimension) {
    total = SaturatingAdd(total, std::size_t{1} << n);
  }
  if (cfg.include_grid) total = SaturatingAdd(total, SaturatingPow(cfg.grid_steps + 1, n));
  return total;
}

OracleResult sample_max_norm(const SquareMatrix& m, const OracleConfig& cfg, double tol) {
  if (const auto v = find_b_matrix_violation(m, tol)) {
    throw Error(ErrorKind::kNotBMatrix,
                fmt::format("oracle requires a B-matrix (row {} fails)", v->row + 1));
  }
  if (cfg.include_grid && cfg.grid_steps == 0) {
    throw Error(ErrorKind::kParameterOutOfRange, "grid_steps must be at least 1");
  }
  const std::size_t n = m.size();
  const std::size_t budget = oracle_sample_count(n, cfg);
  if (budget > kMaxOracleSamples) {
    throw Error(ErrorKind::kSampleBudgetExceeded,
                fmt::format("configuration needs {} evaluations, limit is {}",
                            budget == std::numeric_limits<std::size_t>::max()
                                ? std::string("more than 2^64")
                                : fmt::format("{}", budget),
                            kMaxOracleSamples));
  }

  MaxTracker tracker(m);
  const bool vertices_skipped = cfg.include_vertices && n > kMaxVertexDimension;

  if (cfg.include_vertices && !vertices_skipped) {
    std::vector<std::size_t> digits(n, 0);
    Vector d(n);
    do {
      for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(digits[i]);
      tracker.Evaluate(d);
    } while (Advance(digits, 2));
  }

  if (cfg.include_grid) {
    // Division keeps i/g and (c*i)/(c*g) bit-identical, so refining the grid
    // by an integer factor evaluates a superset of points.
    const double steps = static_cast<double>(cfg.grid_steps);
    std::vector<std::size_t> digits(n, 0);
    Vector d(n);
    do {
      for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(digits[i]) / steps;
      tracker.Evaluate(d);
    } while (Advance(digits, cfg.grid_steps + 1));
  }

  if (cfg.random_samples > 0) {
    std::mt19937_64 rng(cfg.rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vector d(n);
    for (std::size_t s = 0; s < cfg.random_samples; ++s) {
      for (auto& di : d) di = unit(rng);
      tracker.Evaluate(d);
    }
  }

  return std::move(tracker).Finish(vertices_skipped);
}

}  // namespace bmat
