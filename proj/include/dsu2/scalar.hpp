#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <variant>

#include "dsu2/rational.hpp"

namespace dsu2 {

using Complex = std::complex<double>;

/// Ordered from most to least exact; promotion only moves rightwards.
enum class Mode { Exact = 0, Real = 1, Complex = 2 };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

constexpr Mode least_exact(Mode a, Mode b) { return a < b ? b : a; }

/// A number in one of three domains: exact rational, real double, complex
/// double. Binary operations promote both sides to the least exact mode.
class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational r) : value_(std::move(r)) {}     // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}          // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(long{v})) {}     // NOLINT(google-explicit-constructor)
  Scalar(double v) : value_(v) {}                  // NOLINT(google-explicit-constructor)
  Scalar(Complex v) : value_(v) {}                 // NOLINT(google-explicit-constructor)

  static Scalar zero(Mode mode) { return Scalar(0).promote(mode); }
  static Scalar one(Mode mode) { return Scalar(1).promote(mode); }
  static Scalar from(long v, Mode mode) { return Scalar(v).promote(mode); }

  Mode mode() const { return static_cast<Mode>(value_.index()); }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Throws IllegalPromotion if asked to move towards a more exact mode.
  Scalar promote(Mode target) const;

  const Rational& rational() const;
  double real_part() const;
  double imag_part() const;
  Complex to_complex() const;
  /// Real value; throws if the imaginary part is nonzero.
  double to_double() const;

  bool is_zero() const;
  bool is_one() const;
  /// |x| as a double (modulus for complex).
  double magnitude() const;
  /// Sign of a real-valued scalar (-1, 0, 1); complex values must be real.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Exact comparison after promotion (bitwise for floats).
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, double, Complex> value_;
};

/// |a - b| <= tol, or exact equality when both are exact.
bool approx_equal(const Scalar& a, const Scalar& b, double tol);

Scalar pow(const Scalar& base, long exponent);
/// Square root; always produces a float scalar.
Scalar sqrt(const Scalar& x);

/// base^z. Exact when both are exact and the result is rational (always for
/// integer z); otherwise a float result (complex if the base is negative or
/// either side is complex).
Scalar power(const Scalar& base, const Scalar& z);

/// base^z that must stay exact when inputs are exact; nullopt if the result
/// is irrational. Float inputs always succeed.
std::optional<Scalar> closed_power(const Scalar& base, const Scalar& z);

/// Total order used to sort exponential bases: exact by value, floats by
/// (real, imag).
bool base_less(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dsu2
