#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsu2/algebra.hpp"
#include "dsu2/linalg.hpp"
#include "dsu2/report.hpp"
#include "dsu2/rootfind.hpp"

namespace dsu2 {

enum class BasisKind { Unnormalized, Normalized };

std::string_view to_string(BasisKind kind);

/// Matrices of J+, J0, J- on the lowest-weight module with basis
/// F(eta, m) = (J+)^m mod the left ideal, m = 0..dim-1. Matrix column m is
/// the image of basis vector m.
struct ModuleRep {
  AlgebraSpec spec;
  Scalar eta;
  unsigned dim = 0;
  BasisKind basis = BasisKind::Unnormalized;
  Matrix jplus;
  Matrix jzero;
  Matrix jminus;
  /// G^[m](eta), m = 0..dim-1.
  std::vector<Scalar> weights;
  /// Phi(eta, m), m = 0..dim.
  std::vector<Scalar> phis;
  std::vector<std::string> warnings;
};

/// Unnormalized: J0 = diag(G^[m](eta)), J+ F_m = F_{m+1}, J- F_m = Phi(eta,m) F_{m-1}.
/// Normalized (real mode only): phi_m = F_m / sqrt([eta,m]!) with
/// [eta,m] = |Phi(eta,m)|, giving J+ entries sqrt([eta,m+1]) and J- entries
/// sign(Phi(eta,m)) sqrt([eta,m]). J+ annihilates the top vector in both.
/// Throws DegenerateWeight for the normalized basis when some Phi(eta,m),
/// 0 < m < dim, vanishes (|Phi| <= side_tol in float mode).
ModuleRep build_module(const AlgebraSpec& spec, const Scalar& eta, unsigned dim,
                       BasisKind basis = BasisKind::Unnormalized, double side_tol = 1e-8);

/// Position of the first failure of Phi(eta, m) != 0 for 0 < m < dim, if any.
std::optional<unsigned> failed_side_condition(const std::vector<Scalar>& phis, unsigned dim, double side_tol);

/// Checks the defining relations, Cayley-Hamilton for J0, nilpotency of J+-,
/// and the finite-dimensionality conditions Phi(eta,dim) = 0 and the side
/// condition.
CheckReport verify_module(const ModuleRep& rep, double tol = 1e-10, double side_tol = 1e-8);

struct RootInfo {
  Scalar eta;
  /// Found by the exact rational pipeline.
  bool exact = false;
  bool valid = false;
  std::optional<unsigned> failed_side_condition_at;
  /// |Phi(eta, N)| at the returned root.
  double residual = 0.0;
};

struct DimSearchResult {
  unsigned N = 0;
  ExpPoly phi;
  std::vector<RootInfo> roots;
  /// Phi(., N) vanishes identically; every eta is a root.
  bool phi_identically_zero = false;
  std::vector<std::string> notes;

  unsigned valid_count() const;
};

DimSearchResult search_dimension(const AlgebraSpec& spec, unsigned N, const RootSearchConfig& cfg = {},
                                 double side_tol = 1e-8);

/// search_dimension for N = 1..N_max; `jobs` > 1 spreads the N loop over
/// worker threads. Results are ordered by N regardless.
std::vector<DimSearchResult> find_dimensions(const AlgebraSpec& spec, unsigned N_max, const RootSearchConfig& cfg = {},
                                             unsigned jobs = 1, double side_tol = 1e-8);

/// Number of valid lowest weights giving an N-dimensional module.
unsigned multiplicity_report(const AlgebraSpec& spec, unsigned N, const RootSearchConfig& cfg = {});

}  // namespace dsu2
