#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsu2/exppoly.hpp"

namespace dsu2 {

/// Structure data of the algebra
///   J0 J+ = J+ G(J0),  J- J0 = G(J0) J-,  J- J+ = s J+ J- + f(J0).
struct AlgebraSpec {
  std::string name;
  Mode mode = Mode::Exact;
  Scalar s = Scalar(1);
  ExpPoly G = ExpPoly::identity();
  ExpPoly f;
  /// Parameter values the spec was built from (q, c, n, ...), for provenance.
  std::map<std::string, Scalar> params;
  /// Polynomial-valued parameters (e.g. the user function of a generic row).
  std::map<std::string, ExpPoly> poly_params;

  /// Same algebra with every scalar moved to `target` (never more exact).
  AlgebraSpec promote(Mode target) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const AlgebraSpec& spec);

/// Throws InvalidSpec listing every violation.
void require_valid(const AlgebraSpec& spec);

/// G composed with itself m times; m = 0 gives the identity z.
ExpPoly iterate_G(const AlgebraSpec& spec, unsigned m);

/// G^[m](eta) for m = 0..count-1.
std::vector<Scalar> weights(const AlgebraSpec& spec, const Scalar& eta, unsigned count);

/// Phi(eta, m) for m = 0..m_max via Phi(m+1) = f(G^[m](eta)) + s Phi(m).
std::vector<Scalar> phi_sequence(const AlgebraSpec& spec, const Scalar& eta, unsigned m_max);
Scalar phi_numeric(const AlgebraSpec& spec, const Scalar& eta, unsigned m);

/// Phi(., m) as an exponential polynomial in eta, for m = 0..m_max.
std::vector<ExpPoly> phi_symbolic_sequence(const AlgebraSpec& spec, unsigned m_max);
ExpPoly phi_symbolic(const AlgebraSpec& spec, unsigned m);

}  // namespace dsu2
