#pragma once

#include <cstddef>
#include <cstdint>

#include "bmat/matrix.hpp"

namespace bmat {

enum class Family { kExample1, kExample2, kRandomB };

// Parameters for one of the matrix families. Ranges are enforced by
// make_matrix:
//   example1   k >= 1
//   example2   (sqrt(5)-1)/2 < a < 1 and (2-a^2)/(1+a) < k < 1
//   random_b   n >= 2
struct FamilySpec {
  Family family = Family::kRandomB;
  double k = 1.0;
  double a = 0.8;
  std::size_t n = 4;
  std::uint64_t seed = 0;
  bool near_singular = false;
};

SquareMatrix make_matrix(const FamilySpec& spec);

// 4x4 family
//   [ 1.5   0.5             0.4  0.5 ]
//   [-0.1   1.7             0.7  0.6 ]
//   [ 0.8  -0.1 k/(k+1)     1.8  0.7 ]
//   [ 0     0.7             0.8  1.8 ]
SquareMatrix make_example1(double k);

// [[1/k, -a/k], [0, 1/k]]
SquareMatrix make_example2(double a, double k);

// Off-diagonal entries uniform in [-1, 1]; each diagonal entry is the
// smallest value meeting both B-matrix row conditions with margin 0.05
// (1e-3 when near_singular) plus, unless near_singular, a uniform extra in
// [0, 0.5). Deterministic in (n, seed, near_singular).
SquareMatrix make_random_b(std::size_t n, std::uint64_t seed, bool near_singular = false);

// Random SDD M-matrix: off-diagonals uniform in [-1, 0] (each zeroed with
// probability 0.3), diagonal = off-diagonal row mass + uniform (0.01, 1).
SquareMatrix make_random_sdd_m_matrix(std::size_t n, std::uint64_t seed);

}  // namespace bmat
