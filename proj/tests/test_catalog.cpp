#include <doctest.h>

#include "dsu2/catalog.hpp"
#include "dsu2/error.hpp"
#include "specs.hpp"

using namespace dsu2;
using namespace testspecs;

namespace {

PresetParams params(const std::string& key, std::vector<std::string> a) { return parse_preset_params(key, a); }

}  // namespace

TEST_CASE("catalog contents") {
  CHECK(preset_catalog().size() == 9);
  CHECK_THROWS_AS(preset_info("nope"), Error);
  for (const auto& info : preset_catalog()) CHECK_FALSE(info.algebra.empty());
}

TEST_CASE("preset factories") {
  AlgebraSpec w = get_preset("w3_2", params("w3_2", {"c=0"}));
  CHECK(w.G == P({R(2), R(1)}));
  CHECK(w.s == R(1));
  CHECK(w.f == P({R(0), R(0), R(-1)}));

  AlgebraSpec su11 = get_preset("uq_su11", params("uq_su11", {"q=2"}));
  auto bases = su11.f.bases();
  REQUIRE(bases.size() == 2);
  CHECK(bases[0] == R(1, 4));
  CHECK(bases[1] == R(4));
  CHECK(su11.f.terms()[1].coeffs[0] == R(2, 3));

  CHECK(get_preset("poly_sl2", params("poly_sl2", {"n=1"})).f == ExpPoly::constant(R(-1)));
  CHECK(get_preset("def_su2", params("def_su2", {"phi=0,1"})).f == P({R(0), R(-2)}));
  CHECK(get_preset("def_osp12", params("def_osp12", {"f=1,0,-3"})).f == P({R(1), R(0), R(-3)}));

  try {
    get_preset("a21", {});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingParam);
  }
  CHECK_THROWS_AS(get_preset("uq_su2", params("uq_su2", {"q=1"})), Error);
  CHECK_THROWS_AS(get_preset("uq_su2", params("uq_su2", {"q=-2"})), Error);
  CHECK_THROWS_AS(get_preset("poly_sl2", params("poly_sl2", {"n=3/2"})), Error);
  AlgebraSpec osp = get_preset("uq_osp12", params("uq_osp12", {"q=2"}));
  CHECK(osp.mode == Mode::Exact);
  CHECK(phi_symbolic(osp, 3).mode() == Mode::Exact);
  CHECK(get_preset("uq_osp12", params("uq_osp12", {"q=2"}), Mode::Real).mode == Mode::Real);
  CHECK_THROWS_AS(parse_preset_params("w3_2", {"q=2"}), Error);
}

TEST_CASE("comparison with tabulated closed forms") {
  ComparisonReport w = compare_with_table("w3_2", params("w3_2", {"c=0"}), 5);
  CHECK(w.flag == "none");
  CHECK(w.consistent);

  ComparisonReport p = compare_with_table("poly_sl2", params("poly_sl2", {"n=3"}), 4);
  CHECK(p.flag == "global_minus");
  CHECK(p.consistent);

  for (const char* key : {"uq_su2", "uq_su11"}) {
    ComparisonReport r = compare_with_table(key, params(key, {"q=2"}), 5);
    CHECK(r.flag == "none");
  }
  ComparisonReport a31 = compare_with_table("a31_plus", params("a31_plus", {"q=1/3"}), 5);
  CHECK(a31.flag == "none");

  ComparisonReport osp = compare_with_table("uq_osp12", params("uq_osp12", {"q=2"}), 5, Mode::Real);
  CHECK(osp.consistent);
  CHECK_THROWS_AS(compare_with_table("uq_osp12", params("uq_osp12", {"q=4"}), 3), Error);

  // The tabulated A(2,1) row is (1+q)/2 times the structure function; the
  // roots agree.
  ComparisonReport a = compare_with_table("a21", params("a21", {"q=1/2"}), 3);
  CHECK(a.flag == "mismatch");
  for (const auto& row : a.rows) {
    REQUIRE(row.ratio.has_value());
    CHECK(*row.ratio == R(4, 3));
  }
}
