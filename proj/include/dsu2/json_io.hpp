#pragma once

#include <json.hpp>

#include "dsu2/algebra.hpp"
#include "dsu2/casimir.hpp"
#include "dsu2/catalog.hpp"
#include "dsu2/linalg.hpp"
#include "dsu2/repbuild.hpp"
#include "dsu2/rewrite.hpp"

namespace dsu2::io {

using json = nlohmann::json;

/// Exact -> "p/q" or "p"; real -> number; complex -> [re, im].
json to_json(const Scalar& s);
/// Strings parse as exact rationals, numbers as reals, pairs as complex;
/// the result is promoted to `mode`.
Scalar scalar_from_json(const json& j, Mode mode = Mode::Exact);

/// {"terms": [{"coeffs": [...ascending...], "base": "1"}, ...]}
json to_json(const ExpPoly& p);
ExpPoly exppoly_from_json(const json& j, Mode mode = Mode::Exact);

/// Array of rows.
json to_json(const Matrix& m);

/// {"name", "mode", "s", "G", "f", "params"}
json to_json(const AlgebraSpec& spec);
AlgebraSpec algebra_from_json(const json& j);

json to_json(const ModuleRep& rep);
json to_json(const CasimirSolution& sol);
json to_json(const CheckReport& report);
json to_json(const DimSearchResult& result);
json to_json(const NOForm& form);
json to_json(const ComparisonReport& report);

}  // namespace dsu2::io
