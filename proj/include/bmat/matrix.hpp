#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace bmat {

using Vector = std::vector<double>;

// Default strictness margin for the classification predicates.
inline constexpr double kDefaultTol = 1e-10;

// Pivots with magnitude at or below this are treated as singular.
inline constexpr double kPivotThreshold = 1e-13;

// Dense n x n real matrix, row-major. Entries are finite by construction.
class SquareMatrix {
 public:
  // n x n zero matrix.
  explicit SquareMatrix(std::size_t n);
  // Takes ownership of n*n row-major entries.
  SquareMatrix(std::size_t n, std::vector<double> entries);

  static SquareMatrix Identity(std::size_t n);
  static SquareMatrix FromRows(std::initializer_list<std::initializer_list<double>> rows);
  static SquareMatrix Diagonal(std::span<const double> diag);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const { return entries_; }

  SquareMatrix principal_submatrix(std::span<const std::size_t> indices) const;
  Vector multiply(std::span<const double> x) const;

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

// The decomposition M = B+ + C where C has constant rows r_i+ and
// r_i+ = max(0, max_{j != i} m_ij).
struct BPlusSplit {
  SquareMatrix b_plus;
  SquareMatrix c;
  Vector r_plus;

  std::size_t size() const { return b_plus.size(); }
  SquareMatrix reconstruct() const { return b_plus + c; }
};

// Diagonal scaling d in [0,1]^n.
class DScaling {
 public:
  explicit DScaling(Vector d);

  std::size_t size() const { return d_.size(); }
  double operator[](std::size_t i) const { return d_[i]; }
  const Vector& values() const { return d_; }

  friend bool operator==(const DScaling&, const DScaling&) = default;

 private:
  Vector d_;
};

// Why a matrix fails the B-matrix test. Indices are 0-based; `column` is
// unset for a non-positive row sum.
struct BMatrixViolation {
  enum class Kind { kRowSumNotPositive, kEntryNotBelowRowMean };
  Kind kind;
  std::size_t row;
  std::optional<std::size_t> column;
  double row_sum;
  double entry;
};

std::optional<BMatrixViolation> find_b_matrix_violation(const SquareMatrix& m,
                                                        double tol = kDefaultTol);
bool is_b_matrix(const SquareMatrix& m, double tol = kDefaultTol);

// First row i (0-based) with |m_ii| - sum_{j != i} |m_ij| <= tol.
std::optional<std::size_t> find_sdd_violation(const SquareMatrix& m, double tol = kDefaultTol);
bool is_sdd(const SquareMatrix& m, double tol = kDefaultTol);

// SDD with positive diagonal and nonpositive off-diagonal entries.
bool is_sdd_m_matrix(const SquareMatrix& m, double tol = kDefaultTol);

// Evaluates all 2^n - 1 principal minors. Throws DimensionTooLarge for n > 15.
bool is_p_matrix_bruteforce(const SquareMatrix& m);
inline constexpr std::size_t kMaxPMatrixDimension = 15;

BPlusSplit split_b_plus(const SquareMatrix& m);

// I - D + D M.
SquareMatrix scaled_matrix(const SquareMatrix& m, const DScaling& d);

// LU factorization with partial pivoting, PA = LU.
class LuFactorization {
 public:
  explicit LuFactorization(const SquareMatrix& a);

  std::size_t size() const { return lu_.size(); }
  double determinant() const;
  double min_pivot_magnitude() const { return min_pivot_; }
  bool is_singular() const { return min_pivot_ <= kPivotThreshold; }

  // Throws SingularMatrix when is_singular().
  Vector solve(std::span<const double> b) const;
  SquareMatrix inverse() const;

 private:
  SquareMatrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
  double min_pivot_;
};

double inf_norm(const SquareMatrix& m);
double inf_norm(std::span<const double> v);
SquareMatrix inverse(const SquareMatrix& m);
double inverse_inf_norm(const SquareMatrix& m);

}  // namespace bmat
