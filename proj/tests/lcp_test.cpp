#include <cmath>
#include <random>

#include <doctest.h>

#include "bmat/bounds.hpp"
#include "bmat/error.hpp"
#include "bmat/generators.hpp"
#include "bmat/lcp.hpp"

using namespace bmat;

namespace {

LcpInstance Example2Instance() {
  return LcpInstance(make_example2(0.8, 8.0 / 9.0), {-1.0, -1.0});
}

}  // namespace

TEST_CASE("solve_enumeration") {
  SUBCASE("q >= 0 forces x* = 0") {
    const auto s = solve_enumeration(LcpInstance(SquareMatrix::Identity(2), {1, 1}));
    CHECK(s.x_star == Vector{0, 0});
    CHECK(s.w_star == Vector{1, 1});
    CHECK(s.support.empty());
  }
  SUBCASE("interior solution x* = -q") {
    const auto s = solve_enumeration(LcpInstance(SquareMatrix::Identity(2), {-1, -2}));
    CHECK(s.x_star == Vector{1, 2});
    CHECK(s.w_star == Vector{0, 0});
    CHECK(s.support == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("example 2 by back-substitution") {
    // x2 = 8/9, then 9/8 x1 = 1 + 9/10 * 8/9 = 9/5 gives x1 = 8/5.
    const auto s = solve_enumeration(Example2Instance());
    CHECK(s.x_star[0] == doctest::Approx(8.0 / 5.0).epsilon(1e-13));
    CHECK(s.x_star[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-13));
    CHECK(std::abs(s.w_star[0]) <= 1e-12);
    CHECK(std::abs(s.w_star[1]) <= 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(LcpInstance(SquareMatrix::Identity(2), {1.0}), Error);
    try {
      solve_enumeration(LcpInstance(SquareMatrix::FromRows({{0, 1}, {1, 0}}), {-1, -1}));
      FAIL("expected NoSolutionFound");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNoSolutionFound);
    }
    try {
      solve_enumeration(LcpInstance(SquareMatrix::Identity(21), Vector(21, 1.0)));
      FAIL("expected DimensionTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kDimensionTooLarge);
    }
  }
}

TEST_CASE("residual") {
  const LcpInstance id(SquareMatrix::Identity(2), {1, 1});
  CHECK(residual(id, Vector{2, 0}) == Vector{2, 0});
  CHECK(residual(Example2Instance(), Vector{0, 0}) == Vector{-1, -1});
  const auto s = solve_enumeration(Example2Instance());
  CHECK(inf_norm(residual(Example2Instance(), s.x_star)) <= 1e-9);
}

TEST_CASE("validate_error_bound") {
  const auto inst = Example2Instance();
  const auto s = solve_enumeration(inst);
  const auto at_solution = validate_error_bound(inst, s.x_star, 306.0 / 81.0);
  CHECK(at_solution.lhs == 0.0);
  CHECK(at_solution.rhs <= 1e-9);
  CHECK(at_solution.holds);

  const auto eq = validate_error_bound(LcpInstance(SquareMatrix::Identity(2), {-1, -2}),
                                       Vector{0, 0}, 1.0);
  CHECK(eq.lhs == 2.0);
  CHECK(eq.rhs == 2.0);
  CHECK(eq.holds);

  const LcpInstance ex1(make_example1(1.0), Vector(4, -1.0));
  CHECK(validate_error_bound(ex1, Vector(4, 0.0), 13.9878).holds);
  // A bound that is too small is reported as failing.
  CHECK_FALSE(validate_error_bound(ex1, Vector(4, 0.0), 0.01).holds);
}

TEST_CASE("random B-matrix instances: unique support, valid solution, certified error") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uq(-1, 1);
  std::uniform_real_distribution<double> ux(0, 2);
  for (std::uint64_t t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 7;
    const auto m = make_random_b(n, 300 + t, t % 5 == 0);
    Vector q(n), x(n);
    for (auto& v : q) v = uq(rng);
    for (auto& v : x) v = ux(rng);
    const LcpInstance inst(m, q);
    CHECK(accepted_supports(inst).size() == 1);
    const auto s = solve_enumeration(inst);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.x_star[i] >= -kLcpFeasibilityTol);
      CHECK(s.w_star[i] >= -kLcpFeasibilityTol);
      CHECK(std::abs(s.x_star[i] * s.w_star[i]) <= kLcpComplementarityTol);
    }
    CHECK(inf_norm(residual(inst, s.x_star)) <= 1e-9);
    const double bound = compute_bound_new(split_b_plus(m));
    CHECK(validate_error_bound(inst, x, bound).holds);
  }
}
