#include <doctest.h>

#include <cmath>

#include "dsu2/error.hpp"
#include "dsu2/repbuild.hpp"
#include "specs.hpp"

using namespace dsu2;
using namespace testspecs;

TEST_CASE("su(2)-like three-dimensional module") {
  ModuleRep rep = build_module(su2(), R(-1), 3);
  CHECK(rep.jzero == Matrix::diagonal({R(-1), R(0), R(1)}));
  CHECK(rep.jminus(0, 1) == R(2));
  CHECK(rep.jminus(1, 2) == R(2));
  CHECK(rep.jplus(1, 0) == R(1));
  CHECK(rep.jplus(2, 1) == R(1));
  CHECK(rep.jplus(0, 0) == R(0));
  CheckReport report = verify_module(rep);
  CHECK(report.passed());
  for (const char* name : {"J0_Jplus", "Jminus_J0", "Jminus_Jplus", "cayley_hamilton", "Jplus_nilpotent",
                           "Jminus_nilpotent"}) {
    REQUIRE(report.find(name) != nullptr);
    CHECK(report.find(name)->exact_zero);
  }

  ModuleRep norm = build_module(su2(), R(-1), 3, BasisKind::Normalized);
  CHECK(norm.jplus.mode() == Mode::Real);
  CHECK(std::abs(norm.jplus(1, 0).to_double() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(norm.jplus(2, 1).to_double() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(norm.jminus(0, 1).to_double() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(norm.jminus(1, 2).to_double() - std::sqrt(2.0)) < 1e-12);
  CHECK(verify_module(norm).passed());
}

TEST_CASE("one-dimensional module") {
  ModuleRep rep = build_module(su2(), R(0), 1);
  CHECK(rep.jplus == Matrix(1, 1));
  CHECK(rep.jminus == Matrix(1, 1));
  CHECK(rep.jzero == Matrix::diagonal({R(0)}));
  CHECK(verify_module(rep).passed());
}

TEST_CASE("root filtering by the side condition") {
  ModuleRep good = build_module(a21_half(), R(2, 5), 2);
  CHECK(good.weights == std::vector<Scalar>{R(2, 5), R(-4, 5)});
  CHECK(verify_module(good).passed());

  ModuleRep bad = build_module(a21_half(), R(-2), 2);
  CheckReport report = verify_module(bad);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.find("side_condition")->passed);
  CHECK(failed_side_condition(bad.phis, 2, 1e-8) == 1u);
  CHECK_THROWS_AS(build_module(a21_half(), R(-2), 2, BasisKind::Normalized), Error);

  DimSearchResult r = search_dimension(a21_half(), 2);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].eta == R(-2));
  CHECK_FALSE(r.roots[0].valid);
  CHECK(r.roots[0].failed_side_condition_at == 1u);
  CHECK(r.roots[1].eta == R(2, 5));
  CHECK(r.roots[1].valid);
  CHECK(multiplicity_report(a21_half(), 2) == 1);
}

TEST_CASE("dimension search") {
  auto dims = find_dimensions(su2(), 4);
  REQUIRE(dims.size() == 4);
  for (unsigned N = 1; N <= 4; ++N) {
    REQUIRE(dims[N - 1].roots.size() == 1);
    CHECK(dims[N - 1].roots[0].eta == R(-static_cast<long>(N - 1), 2));
    CHECK(dims[N - 1].roots[0].valid);
    CHECK(multiplicity_report(su2(), N) == 1);
  }

  auto osp_dims = find_dimensions(osp(), 3);
  CHECK(osp_dims[0].valid_count() == 1);
  CHECK(osp_dims[0].roots[0].eta == R(0));
  CHECK(osp_dims[1].valid_count() == 0);
  CHECK(osp_dims[1].phi == ExpPoly::constant(R(-1, 4)));
  CHECK(osp_dims[2].valid_count() == 1);
  CHECK(osp_dims[2].roots[0].eta == R(-1, 2));

  // -2 eta^2 - 4 eta - 4 has negative discriminant
  CHECK(multiplicity_report(w3(), 2) == 0);
  RootSearchConfig cfg;
  cfg.want_complex = true;
  CHECK(search_dimension(w3(), 2, cfg).roots.size() == 2);

  auto parallel = find_dimensions(su2(), 6, {}, 3);
  auto serial = find_dimensions(su2(), 6, {}, 1);
  for (unsigned i = 0; i < 6; ++i) CHECK(parallel[i].roots[0].eta == serial[i].roots[0].eta);
}

TEST_CASE("exponential structure functions in float mode") {
  AlgebraSpec uq = make("uq", R(1), P({R(1), R(1)}), -ExpPoly::q_number(R(2), R(2), R(0)), Mode::Real);
  DimSearchResult r = search_dimension(uq, 2);
  REQUIRE(r.valid_count() == 1);
  CHECK(std::abs(r.roots[0].eta.to_double() + 0.5) < 1e-10);
  ModuleRep rep = build_module(uq, r.roots[0].eta, 2);
  CHECK(verify_module(rep).passed());
}
