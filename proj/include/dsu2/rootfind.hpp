#pragma once

#include <vector>

#include "dsu2/exppoly.hpp"

namespace dsu2 {

struct RootSearchConfig {
  double lo = -100.0;
  double hi = 100.0;
  unsigned scan_steps = 4096;
  double root_tol = 1e-10;
  /// Keep non-real roots of polynomial Phi (always kept in complex mode).
  bool want_complex = false;
};

/// Throws InvalidSpec when lo >= hi or scan_steps < 2.
void check_config(const RootSearchConfig& cfg);

/// Distinct rational roots of a polynomial with rational coefficients, in
/// increasing order. Candidates come from the rational root theorem on the
/// denominator-cleared primitive polynomial; each root is verified exactly.
std::vector<Rational> rational_roots(const ExpPoly& p);

/// All complex roots (with multiplicity) of a pure polynomial, by
/// Aberth-Ehrlich iteration followed by Newton polishing. Sorted by
/// (real, imag). A nonzero constant has no roots; the zero polynomial throws
/// ZeroPolynomial.
std::vector<Complex> numeric_poly_roots(const ExpPoly& p, double root_tol = 1e-10);

/// Real roots of a real exponential polynomial on [lo, hi]: sign changes on a
/// uniform grid of scan_steps intervals, refined by bisection to double
/// precision.
/// Roots where the function touches zero without changing sign are missed.
std::vector<double> exp_real_roots(const ExpPoly& p, const RootSearchConfig& cfg = {});

/// Real double evaluation of a real exponential polynomial.
double eval_real(const ExpPoly& p, double z);

}  // namespace dsu2
