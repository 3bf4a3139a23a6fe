#pragma once

#include <string>
#include <vector>

#include "bmat/bounds.hpp"

namespace bmat {

// One row of the published comparison table: the three bounds computed for
// a fixed family member next to the published values.
struct ReproductionRow {
  std::string label;
  std::string parameters;
  double expected_gep;
  double expected_li;
  double expected_new;
  BoundQuantities computed;
  SharpnessConditions conditions;

  bool matches(double tol = 5e-4) const;
};

// Example 1 at k = 1 and k = 2, Example 2 at a = 4/5, k = 8/9.
std::vector<ReproductionRow> reproduce_examples();

}  // namespace bmat
