#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dsu2/error.hpp"
#include "dsu2/rootfind.hpp"

using namespace dsu2;

namespace {

Scalar R(long p, long q = 1) { return Scalar(Rational(p, q)); }
ExpPoly P(std::vector<Scalar> c) { return ExpPoly::polynomial(std::move(c)); }
ExpPoly lin(const Scalar& root) { return P({-root, R(1)}); }

}  // namespace

TEST_CASE("rational roots") {
  CHECK(rational_roots(R(-3) * P({R(2), R(2)})) == std::vector<Rational>{Rational(-1)});
  CHECK(rational_roots(P({R(0), R(-1), R(1)})) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(rational_roots(P({R(-2), R(0), R(1)})).empty());
  CHECK(rational_roots(P({R(-1, 4)})).empty());
  // (1 - q^4)(eta + 2)(eta - 2/5), q = 1/2
  ExpPoly a21 = R(15, 16) * lin(R(-2)) * lin(R(2, 5));
  CHECK(rational_roots(a21) == std::vector<Rational>{Rational(-2), Rational(2, 5)});
  ExpPoly repeated = lin(R(3, 7)) * lin(R(3, 7)) * lin(R(-5));
  CHECK(rational_roots(repeated) == std::vector<Rational>{Rational(-5), Rational(3, 7)});
  // large coefficients exercise the divisor enumeration
  ExpPoly big = lin(R(1000003, 999983)) * lin(R(-7, 1000000007));
  CHECK(rational_roots(big) == std::vector<Rational>{Rational(-7, 1000000007), Rational(1000003, 999983)});
  CHECK_THROWS_AS(rational_roots(ExpPoly::exponential(R(2))), Error);
}

TEST_CASE("numeric polynomial roots") {
  auto r = numeric_poly_roots(P({R(1), R(0), R(1)}));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(0, -1)) < 1e-12);
  CHECK(std::abs(r[1] - Complex(0, 1)) < 1e-12);

  auto a21 = numeric_poly_roots(R(15, 16) * lin(R(-2)) * lin(R(2, 5)));
  REQUIRE(a21.size() == 2);
  CHECK(std::abs(a21[0] - Complex(-2.0)) < 1e-12);
  CHECK(std::abs(a21[1] - Complex(0.4)) < 1e-12);

  CHECK(numeric_poly_roots(P({R(5)})).empty());
  CHECK_THROWS_AS(numeric_poly_roots(ExpPoly::zero()), Error);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> planted;
    ExpPoly p = ExpPoly::constant(Scalar(1.0));
    for (int k = 0; k < 5; ++k) {
      planted.push_back(u(rng));
      p = p * lin(Scalar(planted.back()));
    }
    std::sort(planted.begin(), planted.end());
    auto found = numeric_poly_roots(p);
    REQUIRE(found.size() == 5);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(found[k] - Complex(planted[k])) < 1e-9);
  }
}

TEST_CASE("real roots of exponential polynomials") {
  auto r = exp_real_roots(ExpPoly::exponential(R(2)) - ExpPoly::constant(R(4)));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(exp_real_roots(ExpPoly::constant(R(-1, 4))).empty());

  // Phi(eta, 2) of the q-deformed su(2) row, q = 2: [2][-2 eta - 1]
  ExpPoly phi = R(5, 2) * ExpPoly::q_number(R(2), R(-2), R(-1));
  auto q = exp_real_roots(phi);
  REQUIRE(q.size() == 1);
  CHECK(std::abs(q[0] + 0.5) < 1e-10);

  RootSearchConfig bad;
  bad.lo = 1;
  bad.hi = 0;
  CHECK_THROWS_AS(check_config(bad), Error);
}

TEST_CASE("root invariants") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    ExpPoly p = P({R(c(rng)), R(c(rng)), R(c(rng)), R(1 + (trial % 3))});
    for (const auto& root : rational_roots(p)) CHECK(eval(p, Scalar(root)).is_zero());
    auto all = numeric_poly_roots(p);
    CHECK(all.size() == static_cast<std::size_t>(p.degree()));
    for (const auto& root : rational_roots(p)) {
      bool seen = std::any_of(all.begin(), all.end(), [&](Complex x) { return std::abs(x - Complex(root.to_double())) < 1e-6; });
      CHECK(seen);
    }
  }
}
