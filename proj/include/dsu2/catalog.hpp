#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsu2/algebra.hpp"

namespace dsu2 {

enum class SignConvention { MatchesDefinition, GlobalMinus };

std::string_view to_string(SignConvention c);

struct PresetInfo {
  std::string key;
  std::string algebra;  // row name in the characteristic-function table
  std::vector<std::string> scalar_params;
  std::vector<std::string> poly_params;
  SignConvention sign_convention = SignConvention::MatchesDefinition;
  /// "printed", "derived" (closed form obtained through rho) or "none".
  std::string table_phi;
  std::string G;
  std::string s;
  std::string f;
};

struct PresetParams {
  std::map<std::string, Scalar> scalars;
  std::map<std::string, ExpPoly> polys;
};

/// Every preset, in a fixed order.
const std::vector<PresetInfo>& preset_catalog();
const PresetInfo& preset_info(std::string_view key);

/// Parses "name=value" pairs. Polynomial parameters take comma-separated
/// ascending coefficients ("0,1" is u); scalars take rationals or decimals.
PresetParams parse_preset_params(std::string_view key, const std::vector<std::string>& assignments);

/// Builds and validates a preset. q-rows need q > 0, q != 1; poly_sl2 needs
/// an integer n >= 1. Throws UnknownPreset, MissingParam, InvalidSpec or
/// ClosureError.
AlgebraSpec get_preset(std::string_view key, const PresetParams& params, Mode mode = Mode::Exact);

/// Tabulated closed form of Phi(eta, m), if the row has one. uq_osp12 is only
/// available in a float mode; a31_plus is rho(eta) - rho(G^[m](eta)) with the
/// solved rho.
std::optional<ExpPoly> table_phi(std::string_view key, const PresetParams& params, unsigned m,
                                 Mode mode = Mode::Exact);

enum class RowStatus { Equal, Negated, Mismatch };

std::string_view to_string(RowStatus s);

struct ComparisonRow {
  unsigned m = 0;
  ExpPoly computed;
  ExpPoly tabulated;
  RowStatus status = RowStatus::Mismatch;
  /// computed = ratio * tabulated, when the two differ by a constant factor.
  std::optional<Scalar> ratio;
};

struct ComparisonReport {
  std::string key;
  SignConvention declared = SignConvention::MatchesDefinition;
  std::vector<ComparisonRow> rows;
  /// "none" (all equal), "global_minus" (all negated) or "mismatch".
  std::string flag;
  /// Every row agrees once the declared sign convention is applied.
  bool consistent = false;
};

ComparisonReport compare_with_table(std::string_view key, const PresetParams& params, unsigned m_max,
                                    Mode mode = Mode::Exact);

}  // namespace dsu2
