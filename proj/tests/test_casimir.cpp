#include <doctest.h>

#include <cmath>

#include "dsu2/casimir.hpp"
#include "dsu2/error.hpp"
#include "specs.hpp"

using namespace dsu2;
using namespace testspecs;

TEST_CASE("rho for the su(2)-like and osp-like algebras") {
  CasimirSolution su = solve_rho(su2());
  CHECK(su.rho == P({R(0), R(-1), R(1)}));
  CHECK(su.kernel_dim == 1);
  CHECK(su.residual.is_zero());

  CasimirSolution o = solve_rho(osp());
  CHECK(o.rho == P({R(-1, 16), R(1, 4)}));
  CHECK(o.kernel_dim == 0);

  CasimirSolution zero = solve_rho(make("free", R(1), P({R(1), R(1)}), ExpPoly::zero()));
  CHECK(zero.rho.is_zero());

  CasimirSolution a = solve_rho(a21_half());
  CHECK(a.rho == P({R(0), R(4, 3), R(4, 3)}));
}

TEST_CASE("rho with exponential f") {
  AlgebraSpec uq = make("uq", R(1), P({R(1), R(1)}), -ExpPoly::q_number(R(2), R(2), R(0)));
  CasimirSolution sol = solve_rho(uq);
  CHECK(sol.residual.is_zero());
  CHECK(uq.s * sol.rho - compose(sol.rho, uq.G) == uq.f);
}

TEST_CASE("Casimir eigenvalues and matrices") {
  ExpPoly rho_su = solve_rho(su2()).rho;
  for (unsigned m = 0; m < 3; ++m) CHECK(casimir_eigenvalue(su2(), rho_su, R(-1), m) == R(2));
  ModuleRep rep = build_module(su2(), R(-1), 3);
  CHECK(casimir_matrix(rep, rho_su) == R(2) * Matrix::identity(3));
  CHECK(check_casimir_matrix(rep, rho_su).passed());

  ExpPoly rho_osp = solve_rho(osp()).rho;
  CHECK(casimir_eigenvalue(osp(), rho_osp, R(-1, 2), 1) == R(3, 16));
  CHECK(casimir_eigenvalue(osp(), rho_osp, R(-1, 2), 0) == eval(rho_osp, R(-1, 2)));
  ModuleRep orep = build_module(osp(), R(-1, 2), 3);
  CHECK(casimir_matrix(orep, rho_osp) == Matrix::diagonal({R(-3, 16), R(3, 16), R(-3, 16)}));
  CheckReport r = check_casimir_matrix(orep, rho_osp);
  CHECK(r.passed());
  REQUIRE(r.find("C2_Jplus") != nullptr);
  CHECK(r.find("C2_Jplus")->exact_zero);

  ModuleRep one = build_module(su2(), R(0), 1);
  CHECK(check_casimir_matrix(one, rho_su).passed());
}

TEST_CASE("root-of-unity Casimir") {
  CHECK(check_root_of_unity_casimir(build_module(su2(), R(-1), 3), solve_rho(su2()).rho, 1).passed());
  CHECK(check_root_of_unity_casimir(build_module(osp(), R(-1, 2), 3), solve_rho(osp()).rho, 2).passed());

  AlgebraSpec c = make("s_i", R(1), P({R(1), R(1)}), P({R(0), R(-2)}), Mode::Complex);
  c.s = Scalar(Complex(0, 1));
  CasimirSolution sol = solve_rho(c);
  CHECK(approx_equal(sol.rho, P({Scalar(Complex(0, -1)), Scalar(Complex(1, 1))}).promote(Mode::Complex)));
  ModuleRep rep = build_module(c, Scalar(Complex(-0.5, 0.5)), 2);
  CHECK(verify_module(rep).passed());
  CheckReport r = check_root_of_unity_casimir(rep, sol.rho, 4);
  CHECK(r.passed());
}
