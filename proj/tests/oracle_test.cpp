#include <cmath>

#include <doctest.h>

#include "bmat/bounds.hpp"
#include "bmat/error.hpp"
#include "bmat/generators.hpp"
#include "bmat/oracle.hpp"
#include "reference.hpp"

using namespace bmat;

TEST_CASE("identity: every d gives norm 1") {
  OracleConfig cfg;
  cfg.include_grid = false;
  const auto r = sample_max_norm(SquareMatrix::Identity(2), cfg);
  CHECK(r.max_norm_found == 1.0);
  CHECK(r.samples_evaluated == 4);
  CHECK(r.argmax_d.values() == Vector{0, 0});  // lexicographically smallest tie
  CHECK_FALSE(r.vertices_skipped);
}

TEST_CASE("example 2 on a fine grid stays under the new bound") {
  OracleConfig cfg;
  cfg.grid_steps = 32;
  const auto m = make_example2(0.8, 8.0 / 9.0);
  const auto r = sample_max_norm(m, cfg);
  CHECK(r.samples_evaluated == 4 + 33 * 33);
  CHECK(r.max_norm_found <= 306.0 / 81.0);
  CHECK(r.max_norm_found >= inverse_inf_norm(m));  // d = (1, 1) is sampled
}

TEST_CASE("example 1 with vertices and grid 8 stays under 13.9878") {
  OracleConfig cfg;
  cfg.grid_steps = 8;
  const auto r = sample_max_norm(make_example1(1.0), cfg);
  CHECK(r.max_norm_found <= 13.9878);
  CHECK(r.max_norm_found >= 1.0);
}

TEST_CASE("argmax reproduces the reported norm") {
  OracleConfig cfg;
  cfg.grid_steps = 3;
  cfg.random_samples = 50;
  const auto m = make_random_b(4, 99);
  const auto r = sample_max_norm(m, cfg);
  const double at = static_cast<double>(reference::InverseInfNorm(scaled_matrix(m, r.argmax_d)));
  CHECK(std::abs(at - r.max_norm_found) <= 1e-10 * r.max_norm_found);
}

TEST_CASE("refinement by an integer factor never lowers the maximum") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = make_random_b(2 + seed % 3, seed);
    OracleConfig cfg;
    cfg.random_samples = 20;
    cfg.rng_seed = seed;
    double previous = 0;
    for (std::size_t g : {1, 2, 4, 8}) {
      cfg.grid_steps = g;
      const double now = sample_max_norm(m, cfg).max_norm_found;
      CHECK(now >= previous);
      previous = now;
    }
  }
}

TEST_CASE("results are bit-identical for identical configs") {
  OracleConfig cfg;
  cfg.grid_steps = 2;
  cfg.random_samples = 300;
  cfg.rng_seed = 1234;
  const auto m = make_random_b(5, 3);
  const auto a = sample_max_norm(m, cfg);
  const auto b = sample_max_norm(m, cfg);
  CHECK(a.max_norm_found == b.max_norm_found);
  CHECK(a.argmax_d == b.argmax_d);
  CHECK(a.samples_evaluated == b.samples_evaluated);
  cfg.rng_seed = 1235;
  CHECK(sample_max_norm(m, cfg).samples_evaluated == a.samples_evaluated);
}

TEST_CASE("sample budget and preconditions") {
  OracleConfig cfg;
  cfg.grid_steps = 100;
  CHECK(oracle_sample_count(4, cfg) == 16 + 101ull * 101 * 101 * 101);
  try {
    sample_max_norm(make_random_b(4, 1), cfg);
    FAIL("expected SampleBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSampleBudgetExceeded);
  }
  cfg.grid_steps = 1'000'000;
  CHECK(oracle_sample_count(12, cfg) == std::numeric_limits<std::size_t>::max());

  OracleConfig ok;
  try {
    sample_max_norm(SquareMatrix::FromRows({{1, 2}, {0, 1}}), ok);
    FAIL("expected NotBMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotBMatrix);
  }
  ok.grid_steps = 0;
  CHECK_THROWS_AS(sample_max_norm(SquareMatrix::Identity(2), ok), Error);
}

TEST_CASE("vertices are skipped beyond n = 12") {
  OracleConfig cfg;
  cfg.include_grid = false;
  cfg.random_samples = 5;
  const auto r = sample_max_norm(SquareMatrix::Identity(13), cfg);
  CHECK(r.vertices_skipped);
  CHECK(r.samples_evaluated == 5);
}

TEST_CASE("all three bounds dominate the sampled maximum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto m = make_random_b(2 + seed % 4, 500 + seed, seed % 3 == 0);
    const auto q = compute_bound_quantities(split_b_plus(m));
    OracleConfig cfg;
    cfg.grid_steps = 3;
    cfg.random_samples = 100;
    const double found = sample_max_norm(m, cfg).max_norm_found;
    CHECK(found <= q.bound_new + 1e-9);
    CHECK(found <= q.bound_li + 1e-9);
    CHECK(found <= q.bound_gep + 1e-9);
  }
}
