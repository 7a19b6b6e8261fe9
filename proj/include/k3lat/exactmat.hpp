#pragma once

// Exact integer and rational matrix algebra on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3lat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Raised on precondition violations and malformed mathematical input.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const;
  std::vector<T> row(std::size_t i) const;
  void set_column(std::size_t j, const std::vector<T>& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  std::vector<T> operator*(const std::vector<T>& v) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  /// [this | other]
  Matrix hstack(const Matrix& other) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);
/// Throws MathError when some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// x^T G y
Int bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y);
Rat bilinear(const RatMatrix& gram, const RatVector& x, const RatVector& y);

/// left * A * right = diag(d_1, ..., d_r, 0, ...), d_i | d_{i+1}, d_i >= 1.
struct SnfResult {
  IntMatrix left;
  IntMatrix right;
  IntVector diag;  // length min(rows, cols), trailing zeros past the rank

  std::size_t rank() const;
  /// Invariant factors strictly greater than one.
  IntVector nontrivial() const;
};

/// Smith normal form. Pivots on the smallest nonzero |entry|, ties broken by
/// row then column, so the output is a deterministic function of the input.
SnfResult snf(const IntMatrix& a);

/// transform * A = hermite; row-style echelon form with positive pivots and
/// entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMatrix hermite;
  IntMatrix transform;
  std::size_t rank = 0;
};
HnfResult hnf(const IntMatrix& a);

/// Columns form a primitive basis of the integer kernel {x : A x = 0}.
IntMatrix kernel_saturated(const IntMatrix& a);

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};
Signature signature_symmetric(const IntMatrix& gram);

Int det_exact(const IntMatrix& a);
Rat det_rational(const RatMatrix& a);

std::size_t rank_of(const RatMatrix& a);
std::size_t rank_of(const IntMatrix& a);

/// Unique solution of A X = B. Throws "inconsistent system" or
/// "non-square ambiguous solve" when the kernel of A is nontrivial.
RatMatrix rational_solve(const RatMatrix& a, const RatMatrix& b);
RatMatrix inverse(const RatMatrix& a);

std::string to_string(const IntMatrix& m);

}  // namespace k3lat
