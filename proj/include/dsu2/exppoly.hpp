#pragma once

#include <string>
#include <vector>

#include "dsu2/scalar.hpp"

namespace dsu2 {

/// poly(z) * base^z with the polynomial stored densely, ascending degree.
struct ExpTerm {
  std::vector<Scalar> coeffs;
  Scalar base;
};

/// Finite sum of polynomial-times-exponential terms in one variable z.
///
/// Always held in canonical form: one term per distinct base, terms sorted by
/// base, no zero polynomials, no trailing zero coefficients, every scalar in
/// the same mode. In float modes bases closer than a relative 1e-12 are
/// treated as the same base.
class ExpPoly {
 public:
  /// Zero in exact mode.
  ExpPoly() = default;
  explicit ExpPoly(std::vector<ExpTerm> terms, Mode mode = Mode::Exact);

  static ExpPoly zero(Mode mode = Mode::Exact) { return ExpPoly({}, mode); }
  static ExpPoly constant(const Scalar& c);
  static ExpPoly polynomial(std::vector<Scalar> coeffs);
  /// The identity polynomial z.
  static ExpPoly identity(Mode mode = Mode::Exact);
  /// coeff * base^z.
  static ExpPoly exponential(const Scalar& base, const Scalar& coeff = Scalar(1));
  /// The q-number [a z + b] = (q^(az+b) - q^-(az+b)) / (q - 1/q), with q > 0.
  static ExpPoly q_number(const Scalar& q, const Scalar& a, const Scalar& b);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  Mode mode() const { return mode_; }
  ExpPoly promote(Mode target) const;

  bool is_zero() const { return terms_.empty(); }
  /// True when no term carries a base other than 1.
  bool is_polynomial() const;
  /// Highest polynomial degree over all terms; -1 for the zero ExpPoly.
  int degree() const;
  /// Coefficients of a pure polynomial. Throws NotPolynomial otherwise.
  std::vector<Scalar> poly_coeffs() const;
  /// Coefficient of z^k in the base-1 term (zero if absent).
  Scalar poly_coeff(std::size_t k) const;
  std::vector<Scalar> bases() const;

  /// Drops float coefficients with magnitude <= tol * (largest magnitude).
  ExpPoly chop(double relative_tol) const;

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const Scalar& c, const ExpPoly& p);
  ExpPoly& operator+=(const ExpPoly& o) { return *this = *this + o; }
  ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

  /// Structural equality of canonical forms (floats compared bitwise).
  friend bool operator==(const ExpPoly& a, const ExpPoly& b);

  std::string to_string(std::string_view var = "z") const;

 private:
  void canonicalize();

  std::vector<ExpTerm> terms_;
  Mode mode_ = Mode::Exact;
};

/// Exact equality in exact mode; otherwise coefficient-wise |a-b| <= tol with
/// bases matched by relative 1e-12.
bool approx_equal(const ExpPoly& a, const ExpPoly& b, double tol = 1e-10);

/// p(alpha z + beta). An exponential term q(z) b^z becomes
/// q(alpha z + beta) b^beta (b^alpha)^z; in exact mode throws ClosureError if
/// b^alpha or b^beta is irrational.
ExpPoly compose_affine(const ExpPoly& p, const Scalar& alpha, const Scalar& beta);

/// p(g(z)) for pure polynomials p and g; throws NotPolynomial otherwise.
ExpPoly compose_poly(const ExpPoly& p, const ExpPoly& g);

/// p(g(z)) choosing compose_affine when g has degree <= 1 and compose_poly
/// otherwise.
ExpPoly compose(const ExpPoly& p, const ExpPoly& g);

/// Sum of poly_i(z) * b_i^z. Stays exact when z is exact and every b_i^z is
/// rational (always for integer z); degrades to a float result otherwise.
Scalar eval(const ExpPoly& p, const Scalar& z);

/// Dense polynomial helpers (ascending coefficients, no canonical trimming
/// beyond exact trailing zeros).
namespace poly {
std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> scale(const std::vector<Scalar>& a, const Scalar& c);
Scalar eval(const std::vector<Scalar>& a, const Scalar& z);
void trim(std::vector<Scalar>& a);
}  // namespace poly

}  // namespace dsu2
