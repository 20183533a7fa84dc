#include <doctest.h>

#include <random>

#include "dsu2/error.hpp"
#include "dsu2/linalg.hpp"

using namespace dsu2;

namespace {

Scalar R(long p, long q = 1) { return Scalar(Rational(p, q)); }

Matrix M(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().push_back(R(v));
  }
  return Matrix::from_rows(out);
}

}  // namespace

TEST_CASE("products and brackets") {
  Matrix a = M({{1, 2}, {3, 4}});
  CHECK(Matrix::identity(2) * a == a);
  CHECK((a * Matrix(2, 2)).is_zero());
  CHECK(M({{0, 1}, {0, 0}}) * M({{0, 0}, {1, 0}}) == M({{1, 0}, {0, 0}}));
  CHECK(commutator(a, a).is_zero());
  Matrix b = M({{0, 1}, {1, 0}});
  CHECK(s_commutator(a, b, R(-1)) == a * b + b * a);
  Matrix d1 = Matrix::diagonal({R(1), R(2)}), d2 = Matrix::diagonal({R(3), R(5)});
  CHECK(s_commutator(d1, d2, R(1, 3)) == R(2, 3) * (d1 * d2));
  CHECK(matrix_power(M({{0, 1}, {0, 0}}), 2).is_zero());
  CHECK(matrix_power(a, 0) == Matrix::identity(2));
  CHECK_THROWS_AS(a * Matrix(3, 3), Error);
}

TEST_CASE("functions of diagonal matrices") {
  Matrix d = Matrix::diagonal({R(-1), R(0), R(1)});
  CHECK(apply_exppoly_to_diagonal(ExpPoly::identity(), d) == d);
  ExpPoly p = ExpPoly::polynomial({R(0), R(-1), R(1)});
  CHECK(apply_exppoly_to_diagonal(p, d) == Matrix::diagonal({R(2), R(0), R(0)}));
  Matrix e = apply_exppoly_to_diagonal(ExpPoly::exponential(R(2)), d);
  CHECK(e.mode() == Mode::Exact);
  CHECK(e == Matrix::diagonal({R(1, 2), R(1), R(2)}));
  CHECK_THROWS_AS(apply_exppoly_to_diagonal(p, M({{0, 1}, {0, 0}})), Error);
}

TEST_CASE("mixed modes promote") {
  Matrix a = M({{1, 2}, {3, 4}});
  a.set(0, 0, Scalar(0.5));
  CHECK(a.mode() == Mode::Real);
  CHECK(a(1, 1) == Scalar(4.0));
  CHECK((a + M({{1, 0}, {0, 1}})).mode() == Mode::Real);
}

TEST_CASE("linear solver") {
  auto sol = solve_linear(Matrix::identity(3), {R(1), R(-2), R(5, 7)});
  CHECK(sol.solution == std::vector<Scalar>{R(1), R(-2), R(5, 7)});
  CHECK(sol.kernel_basis.empty());

  auto zero = solve_linear(Matrix(2, 2), {R(0), R(0)});
  CHECK(zero.solution == std::vector<Scalar>{R(0), R(0)});
  CHECK(zero.kernel_basis.size() == 2);

  // rho = a z + b for s = -1, G = z + 1/2, f = -z/2: -2a z - a/2 - 2b = -z/2
  auto osp = solve_linear(Matrix::from_rows({{R(-2), R(0)}, {R(-1, 2), R(-2)}}), {R(-1, 2), R(0)});
  CHECK(osp.solution == std::vector<Scalar>{R(1, 4), R(-1, 16)});

  CHECK_THROWS_AS(solve_linear(M({{1, 1}, {1, 1}}), {R(1), R(2)}), Error);

  auto fl = solve_linear(M({{2, 1}, {1, 3}}).promote(Mode::Real), {Scalar(3.0), Scalar(5.0)});
  CHECK(approx_equal(fl.solution[0], Scalar(0.8), 1e-14));
  CHECK(approx_equal(fl.solution[1], Scalar(1.4), 1e-14));
}

TEST_CASE("fraction-free elimination is exact on random rank-deficient systems") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 5, cols = 6, rank = 3;
    Matrix u(rows, rank), v(rank, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < rank; ++k) u.set(i, k, R(c(rng), 1 + (trial % 3)));
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t j = 0; j < cols; ++j) v.set(k, j, R(c(rng)));
    Matrix a = u * v;
    Matrix x0(cols, 1);
    for (std::size_t j = 0; j < cols; ++j) x0.set(j, 0, R(c(rng), 2));
    Matrix bm = a * x0;
    std::vector<Scalar> b;
    for (std::size_t i = 0; i < rows; ++i) b.push_back(bm(i, 0));

    auto sol = solve_linear(a, b);
    Matrix x(cols, 1);
    for (std::size_t j = 0; j < cols; ++j) x.set(j, 0, sol.solution[j]);
    CHECK((a * x - bm).is_zero());
    CHECK(sol.kernel_basis.size() >= cols - rank);
    for (const auto& k : sol.kernel_basis) {
      Matrix kv(cols, 1);
      for (std::size_t j = 0; j < cols; ++j) kv.set(j, 0, k[j]);
      CHECK((a * kv).is_zero());
    }
  }
}
