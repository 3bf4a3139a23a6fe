#include "bmat/reproduce.hpp"

#include <cmath>

#include "bmat/generators.hpp"

namespace bmat {
namespace {

ReproductionRow MakeRow(std::string label, std::string parameters, const SquareMatrix& m,
                        double gep, double li, double bnew) {
  BoundQuantities q = compute_bound_quantities(split_b_plus(m));
  const SharpnessConditions c = check_sharpness_conditions(q);
  return ReproductionRow{std::move(label), std::move(parameters), gep, li, bnew, std::move(q), c};
}

}  // namespace

bool ReproductionRow::matches(double tol) const {
  return std::abs(computed.bound_gep - expected_gep) <= tol &&
         std::abs(computed.bound_li - expected_li) <= tol &&
         std::abs(computed.bound_new - expected_new) <= tol;
}

std::vector<ReproductionRow> reproduce_examples() {
  std::vector<ReproductionRow> rows;
  rows.push_back(MakeRow("example1", "k=1", make_example1(1.0), 60.0, 14.3775, 13.9878));
  rows.push_back(MakeRow("example1", "k=2", make_example1(2.0), 90.0, 14.4246, 14.0265));
  rows.push_back(MakeRow("example2", "a=4/5 k=8/9", make_example2(4.0 / 5.0, 8.0 / 9.0),
                         360.0 / 81.0, 425.0 / 81.0, 306.0 / 81.0));
  return rows;
}

}  // namespace bmat
