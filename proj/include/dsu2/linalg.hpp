#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsu2/exppoly.hpp"
#include "dsu2/scalar.hpp"

namespace dsu2 {

/// Dense row-major matrix over one scalar mode.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Mode mode = Mode::Exact);

  static Matrix identity(std::size_t n, Mode mode = Mode::Exact);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Mode mode() const { return mode_; }
  bool square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Stores v, promoting the whole matrix if v is less exact.
  void set(std::size_t r, std::size_t c, const Scalar& v);

  Matrix promote(Mode target) const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::vector<Scalar> diagonal_entries() const;
  /// Largest entry magnitude; 0 for the zero matrix.
  double max_abs() const;

  std::vector<std::vector<Scalar>> to_rows() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  /// Real-mode products go through the SIMD gemm kernel.
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Mode mode_ = Mode::Exact;
  std::vector<Scalar> entries_;
};

/// AB - s BA.
Matrix s_commutator(const Matrix& a, const Matrix& b, const Scalar& s);
inline Matrix commutator(const Matrix& a, const Matrix& b) { return s_commutator(a, b, Scalar(1)); }

Matrix matrix_power(const Matrix& a, unsigned k);

/// diag(p(d_ii)); throws NotDiagonal unless d is square and diagonal.
Matrix apply_exppoly_to_diagonal(const ExpPoly& p, const Matrix& d);

struct LinearSolution {
  std::vector<Scalar> solution;
  std::vector<std::vector<Scalar>> kernel_basis;
};

/// Solves A x = b. Exact mode uses fraction-free (Bareiss) elimination on the
/// denominator-cleared system and is exact; float modes use partial pivoting
/// with rank tolerance `tol` relative to the largest entry. Free variables of
/// the particular solution are zero. Throws Inconsistent.
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b, double tol = 1e-12);

}  // namespace dsu2
