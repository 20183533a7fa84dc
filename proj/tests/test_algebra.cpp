#include <doctest.h>

#include <random>

#include "dsu2/algebra.hpp"
#include "dsu2/error.hpp"

using namespace dsu2;

namespace {

Scalar R(long p, long q = 1) { return Scalar(Rational(p, q)); }
ExpPoly P(std::vector<Scalar> c) { return ExpPoly::polynomial(std::move(c)); }

AlgebraSpec make(Scalar s, ExpPoly G, ExpPoly f) {
  AlgebraSpec a;
  a.name = "test";
  a.s = s;
  a.G = G;
  a.f = f;
  return a;
}

AlgebraSpec su2() { return make(R(1), P({R(1), R(1)}), P({R(0), R(-2)})); }

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(su2()).ok());
  CHECK_FALSE(validate(make(R(1), P({R(0), R(0), R(1)}), ExpPoly::exponential(R(2)))).ok());
  CHECK_FALSE(validate(make(R(0), P({R(1), R(1)}), P({R(1)}))).ok());
  CHECK_FALSE(validate(make(R(1), P({R(3)}), P({R(1)}))).ok());
  CHECK_FALSE(validate(make(R(1), P({R(1), R(1)}), ExpPoly::exponential(R(-2)))).ok());
  try {
    require_valid(make(R(0), P({R(1), R(1)}), P({R(1)})));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
  AlgebraSpec declared_exact = su2();
  declared_exact.s = Scalar(1.0);
  CHECK_FALSE(validate(declared_exact).ok());
}

TEST_CASE("iterates of G") {
  CHECK(iterate_G(su2(), 3) == P({R(3), R(1)}));
  CHECK(iterate_G(su2(), 0) == ExpPoly::identity());
  AlgebraSpec a21 = make(R(1), P({R(-1), R(1, 2)}), P({R(0), R(2), R(1)}));
  CHECK(iterate_G(a21, 2) == P({R(-3, 2), R(1, 4)}));
  auto w = weights(a21, R(2, 5), 2);
  CHECK(w[1] == R(-4, 5));
}

TEST_CASE("structure function") {
  CHECK(phi_numeric(su2(), R(-1), 3) == R(0));
  CHECK(phi_numeric(su2(), R(7, 3), 0) == R(0));
  AlgebraSpec w3 = make(R(1), P({R(2), R(1)}), P({R(0), R(0), R(-1)}));
  CHECK(phi_numeric(w3, R(1), 2) == R(-10));
  AlgebraSpec a21 = make(R(1), P({R(-1), R(1, 2)}), P({R(0), R(2), R(1)}));
  CHECK(phi_numeric(a21, R(2, 5), 2) == R(0));
  CHECK(phi_symbolic(su2(), 2) == P({R(-2), R(-4)}));
  CHECK(phi_symbolic(su2(), 0).is_zero());

  for (long m = 1; m <= 5; ++m) {
    Scalar M = R(m);
    Scalar tail = M * (R(4, 3) * M * M - R(2) * M + R(2, 3));
    CHECK(phi_symbolic(w3, m) == P({-tail, R(-2) * M * (M - R(1)), -M}));
  }

  AlgebraSpec su11 = make(R(1), P({R(1), R(1)}), ExpPoly::q_number(R(2), R(2), R(0)));
  CHECK(phi_numeric(su11, R(1), 2) == R(105, 8));
  CHECK(eval(phi_symbolic(su11, 2), R(1)) == R(105, 8));
}

TEST_CASE("recurrence and symbolic/numeric agreement on random specs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> c(-4, 4);
  const Scalar ss[] = {R(1), R(-1), R(2), R(1, 2)};
  for (int i = 0; i < 40; ++i) {
    ExpPoly G = P({R(c(rng)), R(1), R(i % 2 ? 0 : 1)});
    ExpPoly f = P({R(c(rng)), R(c(rng)), R(c(rng)), R(c(rng))});
    AlgebraSpec a = make(ss[i % 4], G, f);
    if (!validate(a).ok()) continue;
    Scalar eta = R(c(rng), 3);
    auto seq = phi_sequence(a, eta, 5);
    auto w = weights(a, eta, 5);
    CHECK(seq[0] == R(0));
    for (unsigned m = 0; m < 5; ++m) {
      CHECK(seq[m + 1] == eval(a.f, w[m]) + a.s * seq[m]);
      CHECK(eval(phi_symbolic(a, m + 1), eta) == seq[m + 1]);
    }
  }
}

TEST_CASE("float mode specs") {
  AlgebraSpec a = su2().promote(Mode::Real);
  a.mode = Mode::Real;
  CHECK(validate(a).ok());
  CHECK(phi_numeric(a, Scalar(-1.0), 3) == Scalar(0.0));
  AlgebraSpec c = su2().promote(Mode::Complex);
  c.s = Scalar(Complex(0, 1));
  Scalar eta(Complex(-0.5, 0.5));
  CHECK(phi_numeric(c, eta, 2).magnitude() < 1e-14);
}
