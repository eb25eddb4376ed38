#pragma once

#include <optional>

#include "hurwitzkit/polynomial.hpp"
#include "hurwitzkit/report.hpp"

namespace hwk {

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
    if (rows < 1 || cols < 1)
      throw std::invalid_argument("RationalMatrix: nonpositive dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return entries_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return entries_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const = default;

  /// Top-left r x c corner.
  RationalMatrix corner(int r, int c) const;

  /// Submatrix selected by 0-indexed row/column index sets.
  RationalMatrix submatrix(const std::vector<int>& row_idx,
                           const std::vector<int>& col_idx) const;

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with zero-pivot
/// row swaps.
Rational det(RationalMatrix m);

/// rows x cols truncation of the infinite Hurwitz matrix H(f):
/// rows alternate even- and odd-indexed coefficients, each row pair shifted
/// one column right. Entry (i, j), 1-indexed, is a_{2j-i-1} (zero outside
/// the coefficient range).
RationalMatrix hurwitz_truncation(const Polynomial& f, int rows, int cols);

/// rows x cols truncation of the factor J(c): odd row 2k-1 carries c at
/// column 2k-1 and 1 at column 2k; even row 2k carries 1 at column 2k+1.
RationalMatrix j_truncation(const Rational& c, int rows, int cols);

/// Checks H(f) == J(c) H(f~) on truncations: the left factor is cut to
/// rows x (rows+1), the right to (rows+1) x cols, which reproduces the
/// infinite product exactly.
bool verify_step_factorization(const Polynomial& f, int rows, int cols);

/// Checks the full chain identity H(f) = J(c_1)...J(c_n) H(b) on
/// truncations: factor k is cut to (rows+k-1) x (rows+k) and H(b) to
/// (rows+n) x cols. Throws std::domain_error when the chain fails.
bool verify_full_factorization(const Polynomial& f, int rows, int cols);

/// Leading principal minors Delta_1..Delta_k of H(f).
std::vector<Rational> leading_principal_minors(const Polynomial& f, int k);

/// Stability by positivity of Delta_1..Delta_{n+1} (sign-normalized input).
StabilityReport minor_criterion(const Polynomial& f);

struct MinorCounterexample {
  std::vector<int> row_idx;  // 0-indexed
  std::vector<int> col_idx;
  Rational value;
};

struct TnnResult {
  bool ok;
  std::optional<MinorCounterexample> counterexample;
};

/// Brute-force check that every r x r minor, r = 1..max_order, is >= 0.
/// Returns the first violating minor otherwise.
TnnResult all_minors_nonnegative(const RationalMatrix& m, int max_order);

}  // namespace hwk
