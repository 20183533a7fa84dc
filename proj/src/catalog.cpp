#include "dsu2/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dsu2/casimir.hpp"
#include "dsu2/error.hpp"

namespace dsu2 {

std::string_view to_string(SignConvention c) {
  return c == SignConvention::GlobalMinus ? "global_minus" : "matches_definition";
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Equal: return "equal";
    case RowStatus::Negated: return "negated";
    case RowStatus::Mismatch: return "mismatch";
  }
  return "?";
}

const std::vector<PresetInfo>& preset_catalog() {
  using SC = SignConvention;
  static const std::vector<PresetInfo> catalog = {
      {"uq_su2", "U_q(su(2))", {"q"}, {}, SC::MatchesDefinition, "printed", "z+1", "1", "-[2z]"},
      {"uq_su11", "U_q(su(1,1))", {"q"}, {}, SC::MatchesDefinition, "printed", "z+1", "1", "[2z]"},
      {"uq_osp12", "U_q(osp(1|2))", {"q"}, {}, SC::MatchesDefinition, "printed", "z+1/2", "-1", "-[2z]/4"},
      {"a21", "A(2,1)", {"q"}, {}, SC::MatchesDefinition, "printed", "qz-1", "1", "2z(1+(1-q)z)"},
      {"a31_plus", "A+(3,1)", {"q"}, {}, SC::MatchesDefinition, "derived", "qz-1", "1", "2z(1-(1-q)^2 z^2)"},
      {"def_osp12", "deformed U(osp(1|2))", {}, {"f"}, SC::MatchesDefinition, "none", "1+z", "-1", "f(z)"},
      {"w3_2", "W_3^(2)", {"c"}, {}, SC::MatchesDefinition, "printed", "2+z", "1", "-(z^2+c)"},
      {"def_su2", "deformed U(su(2))", {}, {"phi"}, SC::GlobalMinus, "printed", "1+z", "1",
       "phi(z(z-1)) - phi(z(z+1))"},
      {"poly_sl2", "polynomial sl(2)", {"n"}, {}, SC::GlobalMinus, "printed", "1+z", "1", "z^n - (z+1)^n"},
  };
  return catalog;
}

const PresetInfo& preset_info(std::string_view key) {
  for (const auto& info : preset_catalog()) {
    if (info.key == key) return info;
  }
  throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(key) + "'");
}

PresetParams parse_preset_params(std::string_view key, const std::vector<std::string>& assignments) {
  const auto& info = preset_info(key);
  PresetParams out;
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "parameter '" + a + "' is not name=value");
    std::string name = a.substr(0, eq);
    std::string value = a.substr(eq + 1);
    bool is_poly = std::find(info.poly_params.begin(), info.poly_params.end(), name) != info.poly_params.end();
    bool is_scalar =
        std::find(info.scalar_params.begin(), info.scalar_params.end(), name) != info.scalar_params.end();
    if (is_poly) {
      std::vector<Scalar> coeffs;
      std::stringstream in(value);
      std::string item;
      while (std::getline(in, item, ',')) coeffs.emplace_back(Rational::parse(item));
      out.polys[name] = ExpPoly::polynomial(coeffs);
    } else if (is_scalar) {
      out.scalars[name] = Scalar(Rational::parse(value));
    } else {
      throw Error(ErrorKind::Parse, "preset '" + std::string(key) + "' has no parameter '" + name + "'");
    }
  }
  return out;
}

namespace {

Scalar scalar_param(const PresetParams& p, std::string_view key, const std::string& name) {
  auto it = p.scalars.find(name);
  if (it == p.scalars.end()) {
    throw Error(ErrorKind::MissingParam, "preset '" + std::string(key) + "' needs parameter " + name);
  }
  return it->second;
}

ExpPoly poly_param(const PresetParams& p, std::string_view key, const std::string& name) {
  auto it = p.polys.find(name);
  if (it == p.polys.end()) {
    throw Error(ErrorKind::MissingParam, "preset '" + std::string(key) + "' needs polynomial parameter " + name);
  }
  if (!it->second.is_polynomial()) throw Error(ErrorKind::InvalidSpec, "parameter " + name + " must be a polynomial");
  return it->second;
}

Scalar q_param(const PresetParams& p, std::string_view key) {
  Scalar q = scalar_param(p, key, "q");
  if (q.imag_part() != 0.0 || q.sign() <= 0 || q.is_one()) {
    throw Error(ErrorKind::InvalidSpec, "q must be real, positive and different from 1 (got " + q.to_string() + ")");
  }
  return q;
}

ExpPoly linear(const Scalar& a, const Scalar& b) { return ExpPoly::polynomial({b, a}); }

ExpPoly monomial(const Scalar& c, unsigned degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.mode()));
  coeffs[degree] = c;
  return ExpPoly::polynomial(coeffs);
}

/// [n] for a number n.
Scalar q_constant(const Scalar& q, long n) {
  return (pow(q, n) - pow(q, -n)) / (q - Scalar(1) / q);
}

}  // namespace

AlgebraSpec get_preset(std::string_view key, const PresetParams& params, Mode mode) {
  const auto& info = preset_info(key);
  AlgebraSpec spec;
  spec.name = info.key;
  const ExpPoly z = ExpPoly::identity();

  if (key == "uq_su2" || key == "uq_su11" || key == "uq_osp12") {
    Scalar q = q_param(params, key);
    spec.params["q"] = q;
    ExpPoly two_z = ExpPoly::q_number(q, Scalar(2), Scalar(0));
    if (key == "uq_su2") {
      spec.G = linear(1, 1);
      spec.f = -two_z;
    } else if (key == "uq_su11") {
      spec.G = linear(1, 1);
      spec.f = two_z;
    } else {
      spec.G = linear(1, Rational(1, 2));
      spec.s = Scalar(-1);
      spec.f = Scalar(Rational(-1, 4)) * two_z;
    }
  } else if (key == "a21" || key == "a31_plus") {
    Scalar q = q_param(params, key);
    spec.params["q"] = q;
    spec.G = linear(q, -1);
    Scalar c = Scalar(1) - q;
    if (key == "a21") {
      spec.f = monomial(2, 1) + monomial(Scalar(2) * c, 2);
    } else {
      spec.f = monomial(2, 1) - monomial(Scalar(2) * c * c, 3);
    }
  } else if (key == "def_osp12") {
    spec.poly_params["f"] = poly_param(params, key, "f");
    spec.G = linear(1, 1);
    spec.s = Scalar(-1);
    spec.f = spec.poly_params["f"];
  } else if (key == "w3_2") {
    Scalar c = scalar_param(params, key, "c");
    spec.params["c"] = c;
    spec.G = linear(1, 2);
    spec.f = -(monomial(1, 2) + ExpPoly::constant(c));
  } else if (key == "def_su2") {
    ExpPoly phi = poly_param(params, key, "phi");
    spec.poly_params["phi"] = phi;
    spec.G = linear(1, 1);
    spec.f = compose_poly(phi, z * linear(1, -1)) - compose_poly(phi, z * linear(1, 1));
  } else if (key == "poly_sl2") {
    Scalar n = scalar_param(params, key, "n");
    if (!n.is_exact() || !n.rational().is_integer() || n.rational().sign() <= 0 ||
        !n.rational().numerator().fits_ulong_p()) {
      throw Error(ErrorKind::InvalidSpec, "poly_sl2 needs an integer n >= 1");
    }
    spec.params["n"] = n;
    unsigned deg = static_cast<unsigned>(n.rational().numerator().get_ui());
    spec.G = linear(1, 1);
    spec.f = monomial(1, deg) - compose_poly(monomial(1, deg), linear(1, 1));
  }

  Mode data = least_exact(spec.s.mode(), least_exact(spec.G.mode(), spec.f.mode()));
  spec.mode = data;
  spec = spec.promote(mode);
  require_valid(spec);
  return spec;
}

std::optional<ExpPoly> table_phi(std::string_view key, const PresetParams& params, unsigned m, Mode mode) {
  const auto& info = preset_info(key);
  if (info.table_phi == "none") return std::nullopt;
  const long mm = static_cast<long>(m);
  const Scalar M(mm);
  ExpPoly out;

  if (key == "uq_su2" || key == "uq_su11") {
    Scalar q = q_param(params, key);
    Scalar sign = key == "uq_su2" ? Scalar(-1) : Scalar(1);
    // [m][±(2 eta + m - 1)]
    out = q_constant(q, mm) * ExpPoly::q_number(q, sign * Scalar(2), sign * Scalar(mm - 1));
  } else if (key == "uq_osp12") {
    if (mode == Mode::Exact) return std::nullopt;
    Scalar q = q_param(params, key).promote(mode);
    Scalar prefactor = sqrt(q) / (Scalar(4) * (Scalar(1) + q));
    Scalar alt = Scalar(m % 2 == 0 ? 1 : -1);
    Scalar half = Scalar(0.5).promote(mode);
    out = prefactor * (alt * ExpPoly::q_number(q, Scalar(2), -half) -
                       ExpPoly::q_number(q, Scalar(2), Scalar(mm).promote(mode) - half));
  } else if (key == "a21") {
    Scalar q = q_param(params, key);
    Scalar partial = Scalar(0);
    for (long j = 1; j < mm; ++j) partial += pow(q, j);
    out = Scalar(Scalar(1) - pow(q, 2 * mm)) * (linear(1, Scalar(1) / (Scalar(1) - q)) *
                                                 linear(1, -(partial / (Scalar(1) + pow(q, mm)))));
  } else if (key == "a31_plus") {
    Scalar q = q_param(params, key);
    AlgebraSpec spec = get_preset(key, params, mode);
    ExpPoly rho = solve_rho(spec).rho;
    ExpPoly shifted = linear(pow(q, mm), -((Scalar(1) - pow(q, mm)) / (Scalar(1) - q)));
    out = rho - compose_poly(rho, shifted);
  } else if (key == "w3_2") {
    Scalar c = scalar_param(params, key, "c");
    Scalar tail = M * (Scalar(Rational(4, 3)) * M * M - Scalar(2) * M + c + Scalar(Rational(2, 3)));
    out = ExpPoly::polynomial({-tail, Scalar(-2) * M * (M - Scalar(1)), -M});
  } else if (key == "def_su2") {
    ExpPoly phi = poly_param(params, key, "phi");
    ExpPoly z = ExpPoly::identity();
    out = compose_poly(phi, linear(1, M) * linear(1, M - Scalar(1))) - compose_poly(phi, z * linear(1, -1));
  } else if (key == "poly_sl2") {
    Scalar n = scalar_param(params, key, "n");
    unsigned deg = static_cast<unsigned>(n.rational().numerator().get_ui());
    out = compose_poly(monomial(1, deg), linear(1, M)) - monomial(1, deg);
  }
  return out.promote(least_exact(out.mode(), mode));
}

namespace {

std::optional<Scalar> constant_ratio(const ExpPoly& computed, const ExpPoly& tabulated) {
  if (tabulated.is_zero() || computed.is_zero()) return std::nullopt;
  const auto& lead = tabulated.terms().back();
  const Scalar& c_tab = lead.coeffs.back();
  for (const auto& t : computed.terms()) {
    bool same = t.base.is_exact() && lead.base.is_exact() ? t.base == lead.base
                                                          : (t.base - lead.base).magnitude() <= 1e-12 * t.base.magnitude();
    if (!same || t.coeffs.size() != lead.coeffs.size()) continue;
    Scalar ratio = t.coeffs.back() / c_tab;
    if (approx_equal(computed, ratio * tabulated)) return ratio;
  }
  return std::nullopt;
}

}  // namespace

ComparisonReport compare_with_table(std::string_view key, const PresetParams& params, unsigned m_max, Mode mode) {
  const auto& info = preset_info(key);
  ComparisonReport report;
  report.key = info.key;
  report.declared = info.sign_convention;
  AlgebraSpec spec = get_preset(key, params, mode);
  auto computed = phi_symbolic_sequence(spec, m_max);
  bool all_equal = true;
  bool all_negated = true;
  for (unsigned m = 1; m <= m_max; ++m) {
    auto tab = table_phi(key, params, m, spec.mode);
    if (!tab) {
      throw Error(ErrorKind::InvalidSpec, "preset '" + info.key + "' has no tabulated Phi in " +
                                              std::string(dsu2::to_string(spec.mode)) + " mode");
    }
    ComparisonRow row;
    row.m = m;
    row.computed = computed[m];
    row.tabulated = *tab;
    if (approx_equal(row.computed, row.tabulated)) {
      row.status = RowStatus::Equal;
    } else if (approx_equal(row.computed, -row.tabulated)) {
      row.status = RowStatus::Negated;
    } else {
      row.status = RowStatus::Mismatch;
      row.ratio = constant_ratio(row.computed, row.tabulated);
    }
    // A row that is identically zero on both sides counts as both.
    all_equal = all_equal && row.status == RowStatus::Equal;
    all_negated = all_negated && (row.status == RowStatus::Negated ||
                                  (row.status == RowStatus::Equal && row.computed.is_zero()));
    report.rows.push_back(std::move(row));
  }
  report.flag = all_equal ? "none" : (all_negated ? "global_minus" : "mismatch");
  report.consistent = report.declared == SignConvention::GlobalMinus ? report.flag == "global_minus"
                                                                     : report.flag == "none";
  return report;
}

}  // namespace dsu2
