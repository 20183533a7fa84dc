#include "dsu2/linalg.hpp"

#include <algorithm>

#include "dsu2/error.hpp"
#include "dsu2/kernels.hpp"

namespace dsu2 {

Matrix::Matrix(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), entries_(rows * cols, Scalar::zero(mode)) {}

Matrix Matrix::identity(std::size_t n, Mode mode) {
  Matrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(mode);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.mode() > mode_) *this = promote(v.mode());
  entries_[r * cols_ + c] = v.promote(mode_);
}

Matrix Matrix::promote(Mode target) const {
  if (target < mode_) throw Error(ErrorKind::IllegalPromotion, "cannot promote matrix to a more exact mode");
  Matrix out = *this;
  out.mode_ = target;
  for (auto& e : out.entries_) e = e.promote(target);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_diagonal() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Scalar> Matrix::diagonal_entries() const {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back((*this)(i, i));
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, e.magnitude());
  return m;
}

std::vector<std::vector<Scalar>> Matrix::to_rows() const {
  std::vector<std::vector<Scalar>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
}

template <typename Op>
Matrix elementwise(const Matrix& a, const Matrix& b, Op op) {
  require_same_shape(a, b);
  Mode m = least_exact(a.mode(), b.mode());
  Matrix out(a.rows(), a.cols(), m);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, op(a(r, c), b(r, c)));
  }
  return out;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes do not conform");
  Mode m = least_exact(a.mode(), b.mode());
  Matrix out(a.rows(), b.cols(), m);
  if (m == Mode::Real) {
    std::vector<double> x(a.entries_.size());
    std::vector<double> y(b.entries_.size());
    std::vector<double> z(a.rows() * b.cols());
    std::transform(a.entries_.begin(), a.entries_.end(), x.begin(), [](const Scalar& s) { return s.real_part(); });
    std::transform(b.entries_.begin(), b.entries_.end(), y.begin(), [](const Scalar& s) { return s.real_part(); });
    kernels::gemm(a.rows(), a.cols(), b.cols(), x, y, z);
    std::transform(z.begin(), z.end(), out.entries_.begin(), [](double v) { return Scalar(v); });
    return out;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        auto& slot = out.entries_[i * out.cols_ + j];
        slot = slot + (aik * bkj).promote(m);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix out(a.rows(), a.cols(), least_exact(c.mode(), a.mode()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t col = 0; col < a.cols(); ++col) out.set(r, col, c * a(r, col));
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i] == b.entries_[i])) return false;
  }
  return true;
}

Matrix s_commutator(const Matrix& a, const Matrix& b, const Scalar& s) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "s-commutator needs square matrices of equal size");
  }
  return a * b - s * (b * a);
}

Matrix matrix_power(const Matrix& a, unsigned k) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "power of a non-square matrix");
  Matrix result = Matrix::identity(a.rows(), a.mode());
  Matrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix apply_exppoly_to_diagonal(const ExpPoly& p, const Matrix& d) {
  if (!d.is_diagonal()) throw Error(ErrorKind::NotDiagonal, "function of a matrix needs a diagonal argument");
  std::vector<Scalar> entries;
  for (const auto& x : d.diagonal_entries()) entries.push_back(eval(p, x));
  Matrix out = Matrix::diagonal(entries);
  return out.promote(least_exact(out.mode(), least_exact(d.mode(), p.mode())));
}

namespace {

LinearSolution back_substitute(std::size_t n, const std::vector<std::size_t>& pivot_cols,
                               const std::vector<std::vector<Scalar>>& rows, Mode mode) {
  // rows[r] holds n coefficients followed by the right-hand side.
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  auto solve_with = [&](const std::vector<Scalar>& free_values, bool homogeneous) {
    std::vector<Scalar> x = free_values;
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
      std::size_t pc = pivot_cols[r];
      Scalar acc = homogeneous ? Scalar::zero(mode) : rows[r][n];
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (!rows[r][j].is_zero() && !x[j].is_zero()) acc -= rows[r][j] * x[j];
      }
      x[pc] = acc / rows[r][pc];
    }
    return x;
  };

  LinearSolution out;
  out.solution = solve_with(std::vector<Scalar>(n, Scalar::zero(mode)), false);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> free_values(n, Scalar::zero(mode));
    free_values[c] = Scalar::one(mode);
    out.kernel_basis.push_back(solve_with(free_values, true));
  }
  return out;
}

LinearSolution solve_exact(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Clear denominators row by row, then Bareiss on the integer matrix.
  std::vector<std::vector<mpz_class>> mat(m, std::vector<mpz_class>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& v = c < n ? a(r, c).rational() : b[r].rational();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& v = c < n ? a(r, c).rational() : b[r].rational();
      mat[r][c] = v.numerator() * (lcm / v.denominator());
    }
  }

  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && mat[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(mat[p], mat[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j) {
        mpz_class v = mat[row][col] * mat[i][j] - mat[i][col] * mat[row][j];
        mpz_divexact(mat[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][col] = 0;
    }
    prev = mat[row][col];
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r) {
    if (mat[r][n] != 0) throw Error(ErrorKind::Inconsistent, "linear system is inconsistent");
  }

  std::vector<std::vector<Scalar>> rows(row, std::vector<Scalar>(n + 1));
  for (std::size_t r = 0; r < row; ++r) {
    for (std::size_t c = 0; c <= n; ++c) rows[r][c] = Scalar(Rational(mat[r][c], mpz_class(1)));
  }
  return back_substitute(n, pivot_cols, rows, Mode::Exact);
}

LinearSolution solve_float(const Matrix& a, const std::vector<Scalar>& b, Mode mode, double tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::vector<Scalar>> mat(m, std::vector<Scalar>(n + 1));
  double scale = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      mat[r][c] = a(r, c).promote(mode);
      scale = std::max(scale, mat[r][c].magnitude());
    }
    mat[r][n] = b[r].promote(mode);
  }
  double threshold = tol * std::max(scale, 1.0);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    for (std::size_t i = row + 1; i < m; ++i) {
      if (mat[i][col].magnitude() > mat[p][col].magnitude()) p = i;
    }
    if (mat[p][col].magnitude() <= threshold) {
      for (std::size_t i = row; i < m; ++i) mat[i][col] = Scalar::zero(mode);
      continue;
    }
    std::swap(mat[p], mat[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      Scalar factor = mat[i][col] / mat[row][col];
      for (std::size_t j = col; j <= n; ++j) mat[i][j] -= factor * mat[row][j];
      mat[i][col] = Scalar::zero(mode);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  double rhs_scale = 0.0;
  for (const auto& v : b) rhs_scale = std::max(rhs_scale, v.magnitude());
  for (std::size_t r = row; r < m; ++r) {
    if (mat[r][n].magnitude() > tol * std::max({scale, rhs_scale, 1.0})) {
      throw Error(ErrorKind::Inconsistent, "linear system is inconsistent");
    }
  }
  mat.resize(row);
  return back_substitute(n, pivot_cols, mat, mode);
}

}  // namespace

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b, double tol) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from rows");
  Mode mode = a.mode();
  for (const auto& v : b) mode = least_exact(mode, v.mode());
  if (mode == Mode::Exact) return solve_exact(a, b);
  return solve_float(a, b, mode, tol);
}

}  // namespace dsu2
