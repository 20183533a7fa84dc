#include <doctest.h>

#include <cmath>
#include <random>

#include "dsu2/kernels.hpp"
#include "dsu2/linalg.hpp"

using namespace dsu2;
using namespace dsu2::kernels;

TEST_CASE("dispatch reports a usable isa") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(isa_available(active_isa()));
}

TEST_CASE("scalar grid evaluation matches the naive formula") {
  FlatExpPoly p{{{1.0, -2.0, 0.5}, {3.0}}, {0.0, std::log(2.0)}};
  std::vector<double> z{-3.0, -0.5, 0.0, 1.0, 2.5};
  std::vector<double> out(z.size());
  eval_exppoly_grid_scalar(p, z, out);
  for (std::size_t i = 0; i < z.size(); ++i) {
    double expect = 1.0 - 2.0 * z[i] + 0.5 * z[i] * z[i] + 3.0 * std::pow(2.0, z[i]);
    CHECK(out[i] == doctest::Approx(expect).epsilon(1e-14));
  }
}

#ifdef DSU2_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!isa_available(Isa::Avx2)) return;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  SUBCASE("exp") {
    std::vector<double> x;
    for (double t = -700.0; t <= 700.0; t += 0.37) x.push_back(t);
    x.push_back(0.0);
    x.push_back(-1e-300);
    std::vector<double> out(x.size());
    exp_avx2(x, out);
    for (std::size_t i = 0; i < x.size(); ++i) {
      double ref = std::exp(x[i]);
      CHECK(std::abs(out[i] - ref) <= 4e-15 * ref);
    }
  }

  SUBCASE("grid") {
    FlatExpPoly p{{{u(rng), u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng)}}, {0.0, std::log(4.0), std::log(0.25)}};
    std::vector<double> z;
    for (int i = 0; i < 1031; ++i) z.push_back(-20.0 + 40.0 * i / 1030.0);
    std::vector<double> a(z.size()), b(z.size());
    eval_exppoly_grid_scalar(p, z, a);
    eval_exppoly_grid_avx2(p, z, b);
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK(std::abs(a[i] - b[i]) <= 1e-12 * (1.0 + std::abs(a[i])));
    }
  }

  SUBCASE("gemm is bitwise identical") {
    for (std::size_t n : {1u, 3u, 4u, 7u, 13u}) {
      std::size_t k = n + 2, m = n + 5;
      std::vector<double> a(n * k), b(k * m), c1(n * m), c2(n * m);
      for (auto& v : a) v = u(rng);
      for (auto& v : b) v = u(rng);
      gemm_scalar(n, k, m, a, b, c1);
      gemm_avx2(n, k, m, a, b, c2);
      CHECK(c1 == c2);
    }
  }
}
#endif

TEST_CASE("real matrix products use the kernel and match exact products") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-50, 50);
  Matrix a(6, 5), b(5, 4);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 5; ++j) a.set(i, j, Scalar(Rational(c(rng))));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 4; ++j) b.set(i, j, Scalar(Rational(c(rng))));
  Matrix exact = a * b;
  Matrix real = a.promote(Mode::Real) * b.promote(Mode::Real);
  CHECK(real == exact.promote(Mode::Real));
}
