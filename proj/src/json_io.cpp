#include "dsu2/json_io.hpp"

#include "dsu2/error.hpp"

namespace dsu2::io {

json to_json(const Scalar& s) {
  switch (s.mode()) {
    case Mode::Exact: return s.rational().to_string();
    case Mode::Real: return s.real_part();
    case Mode::Complex: return json::array({s.real_part(), s.imag_part()});
  }
  return nullptr;
}

Scalar scalar_from_json(const json& j, Mode mode) {
  Scalar out;
  if (j.is_string()) {
    out = Scalar(Rational::parse(j.get<std::string>()));
  } else if (j.is_number_integer()) {
    out = Scalar(Rational(j.get<long>()));
  } else if (j.is_number()) {
    out = Scalar(j.get<double>());
  } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    out = Scalar(Complex(j[0].get<double>(), j[1].get<double>()));
  } else {
    throw Error(ErrorKind::Parse, "not a scalar: " + j.dump());
  }
  if (out.mode() > mode) {
    throw Error(ErrorKind::IllegalPromotion,
                "scalar " + j.dump() + " is less exact than mode " + std::string(to_string(mode)));
  }
  return out.promote(mode);
}

json to_json(const ExpPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json coeffs = json::array();
    for (const auto& c : t.coeffs) coeffs.push_back(to_json(c));
    terms.push_back({{"coeffs", coeffs}, {"base", to_json(t.base)}});
  }
  return {{"terms", terms}};
}

ExpPoly exppoly_from_json(const json& j, Mode mode) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorKind::Parse, "ExpPoly JSON needs a 'terms' array");
  }
  std::vector<ExpTerm> terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeffs") || !t["coeffs"].is_array()) throw Error(ErrorKind::Parse, "term needs 'coeffs'");
    ExpTerm term;
    for (const auto& c : t["coeffs"]) term.coeffs.push_back(scalar_from_json(c, mode));
    term.base = t.contains("base") ? scalar_from_json(t["base"], mode) : Scalar::one(mode);
    terms.push_back(std::move(term));
  }
  return ExpPoly(std::move(terms), mode);
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const AlgebraSpec& spec) {
  json params = json::object();
  for (const auto& [k, v] : spec.params) params[k] = to_json(v);
  for (const auto& [k, v] : spec.poly_params) params[k] = to_json(v);
  return {{"name", spec.name},       {"mode", std::string(to_string(spec.mode))},
          {"s", to_json(spec.s)},    {"G", to_json(spec.G)},
          {"f", to_json(spec.f)},    {"params", params}};
}

AlgebraSpec algebra_from_json(const json& j) {
  try {
    AlgebraSpec spec;
    spec.name = j.value("name", std::string("custom"));
    spec.mode = parse_mode(j.value("mode", std::string("exact")));
    spec.s = scalar_from_json(j.at("s"), spec.mode);
    spec.G = exppoly_from_json(j.at("G"), spec.mode);
    spec.f = exppoly_from_json(j.at("f"), spec.mode);
    if (j.contains("params")) {
      for (const auto& [k, v] : j["params"].items()) {
        if (v.is_object()) {
          spec.poly_params[k] = exppoly_from_json(v, spec.mode);
        } else {
          spec.params[k] = scalar_from_json(v, spec.mode);
        }
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("algebra JSON: ") + e.what());
  }
}

namespace {

json scalars(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

}  // namespace

json to_json(const ModuleRep& rep) {
  return {{"algebra", rep.spec.name},
          {"eta", to_json(rep.eta)},
          {"dim", rep.dim},
          {"basis_kind", std::string(to_string(rep.basis))},
          {"Jplus", to_json(rep.jplus)},
          {"Jzero", to_json(rep.jzero)},
          {"Jminus", to_json(rep.jminus)},
          {"weights", scalars(rep.weights)},
          {"phis", scalars(rep.phis)},
          {"warnings", rep.warnings}};
}

json to_json(const CasimirSolution& sol) {
  return {{"rho", to_json(sol.rho)},
          {"kernel_dim", sol.kernel_dim},
          {"residual", to_json(sol.residual)},
          {"residual_is_zero", sol.residual.is_zero()},
          {"max_degree", sol.max_degree}};
}

json to_json(const CheckReport& report) {
  json items = json::array();
  for (const auto& i : report.items) {
    json item = {{"name", i.name}, {"residual", i.residual}, {"exact_zero", i.exact_zero}, {"passed", i.passed}};
    if (!i.detail.empty()) item["detail"] = i.detail;
    items.push_back(std::move(item));
  }
  return {{"passed", report.passed()}, {"checks", items}};
}

json to_json(const DimSearchResult& result) {
  json roots = json::array();
  for (const auto& r : result.roots) {
    json item = {{"eta", to_json(r.eta)}, {"exact", r.exact}, {"valid", r.valid}, {"residual", r.residual}};
    item["failed_side_condition_at"] =
        r.failed_side_condition_at ? json(*r.failed_side_condition_at) : json(nullptr);
    roots.push_back(std::move(item));
  }
  return {{"N", result.N},
          {"phi", to_json(result.phi)},
          {"roots", roots},
          {"valid_count", result.valid_count()},
          {"phi_identically_zero", result.phi_identically_zero},
          {"notes", result.notes}};
}

json to_json(const NOForm& form) {
  json terms = json::array();
  for (const auto& [key, middle] : form.terms()) {
    terms.push_back({{"plus_power", key.first}, {"minus_power", key.second}, {"middle", to_json(middle)}});
  }
  return {{"terms", terms}, {"text", form.to_string()}};
}

json to_json(const ComparisonReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row = {{"m", r.m},
                {"computed", to_json(r.computed)},
                {"tabulated", to_json(r.tabulated)},
                {"status", std::string(to_string(r.status))}};
    row["ratio"] = r.ratio ? to_json(*r.ratio) : json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"key", report.key},
          {"declared_sign_convention", std::string(to_string(report.declared))},
          {"flag", report.flag},
          {"consistent", report.consistent},
          {"rows", rows}};
}

}  // namespace dsu2::io
