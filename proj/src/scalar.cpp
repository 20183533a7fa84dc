#include "dsu2/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dsu2/error.hpp"

namespace dsu2 {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Exact: return "exact";
    case Mode::Real: return "real";
    case Mode::Complex: return "complex";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::Exact;
  if (text == "real") return Mode::Real;
  if (text == "complex") return Mode::Complex;
  throw Error(ErrorKind::Parse, "unknown scalar mode '" + std::string(text) + "'");
}

Scalar Scalar::promote(Mode target) const {
  Mode here = mode();
  if (target == here) return *this;
  if (target < here) {
    throw Error(ErrorKind::IllegalPromotion, "cannot promote " + std::string(dsu2::to_string(here)) +
                                                 " scalar to " + std::string(dsu2::to_string(target)));
  }
  if (here == Mode::Exact) {
    double d = std::get<Rational>(value_).to_double();
    return target == Mode::Real ? Scalar(d) : Scalar(Complex(d, 0.0));
  }
  return Scalar(Complex(std::get<double>(value_), 0.0));
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorKind::IllegalPromotion, "scalar is not exact");
}

double Scalar::real_part() const {
  switch (mode()) {
    case Mode::Exact: return std::get<Rational>(value_).to_double();
    case Mode::Real: return std::get<double>(value_);
    case Mode::Complex: return std::get<Complex>(value_).real();
  }
  return 0.0;
}

double Scalar::imag_part() const {
  return mode() == Mode::Complex ? std::get<Complex>(value_).imag() : 0.0;
}

Complex Scalar::to_complex() const { return {real_part(), imag_part()}; }

double Scalar::to_double() const {
  if (imag_part() != 0.0) throw Error(ErrorKind::IllegalPromotion, "complex scalar has no real value");
  return real_part();
}

bool Scalar::is_zero() const {
  switch (mode()) {
    case Mode::Exact: return std::get<Rational>(value_).is_zero();
    case Mode::Real: return std::get<double>(value_) == 0.0;
    case Mode::Complex: return std::get<Complex>(value_) == Complex(0.0, 0.0);
  }
  return false;
}

bool Scalar::is_one() const { return *this == Scalar(1); }

double Scalar::magnitude() const {
  switch (mode()) {
    case Mode::Exact: return abs(std::get<Rational>(value_)).to_double();
    case Mode::Real: return std::fabs(std::get<double>(value_));
    case Mode::Complex: return std::abs(std::get<Complex>(value_));
  }
  return 0.0;
}

int Scalar::sign() const {
  if (mode() == Mode::Exact) return std::get<Rational>(value_).sign();
  double v = to_double();
  return (v > 0.0) - (v < 0.0);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

namespace {

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  Mode m = least_exact(a.mode(), b.mode());
  Scalar x = a.promote(m);
  Scalar y = b.promote(m);
  switch (m) {
    case Mode::Exact: return Scalar(op(x.rational(), y.rational()));
    case Mode::Real: return Scalar(op(x.real_part(), y.real_part()));
    case Mode::Complex: return Scalar(op(x.to_complex(), y.to_complex()));
  }
  return {};
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  Mode m = least_exact(a.mode(), b.mode());
  Scalar x = a.promote(m);
  Scalar y = b.promote(m);
  switch (m) {
    case Mode::Exact: return x.rational() == y.rational();
    case Mode::Real: return x.real_part() == y.real_part();
    case Mode::Complex: return x.to_complex() == y.to_complex();
  }
  return false;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string Scalar::to_string() const {
  switch (mode()) {
    case Mode::Exact: return std::get<Rational>(value_).to_string();
    case Mode::Real: return format_double(std::get<double>(value_));
    case Mode::Complex: {
      auto c = std::get<Complex>(value_);
      return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
    }
  }
  return {};
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return (a - b).magnitude() <= tol;
}

Scalar pow(const Scalar& base, long exponent) {
  switch (base.mode()) {
    case Mode::Exact: return Scalar(pow(base.rational(), exponent));
    case Mode::Real: return Scalar(std::pow(base.real_part(), static_cast<double>(exponent)));
    case Mode::Complex: {
      // Repeated squaring keeps integer powers of roots of unity accurate.
      Complex result(1.0, 0.0);
      Complex b = base.to_complex();
      long e = exponent < 0 ? -exponent : exponent;
      while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
      }
      return Scalar(exponent < 0 ? Complex(1.0, 0.0) / result : result);
    }
  }
  return {};
}

Scalar sqrt(const Scalar& x) {
  if (x.mode() == Mode::Complex) return Scalar(std::sqrt(x.to_complex()));
  double v = x.real_part();
  if (v < 0.0) return Scalar(std::sqrt(Complex(v, 0.0)));
  return Scalar(std::sqrt(v));
}

Scalar power(const Scalar& base, const Scalar& z) {
  if (base.is_exact() && z.is_exact()) {
    if (auto r = exact_pow(base.rational(), z.rational())) return Scalar(*r);
  }
  if (base.mode() != Mode::Complex && z.mode() != Mode::Complex && base.real_part() > 0.0) {
    return Scalar(std::pow(base.real_part(), z.real_part()));
  }
  if (base.is_one()) return Scalar::one(least_exact(Mode::Real, least_exact(base.mode(), z.mode())));
  return Scalar(std::pow(base.to_complex(), z.to_complex()));
}

std::optional<Scalar> closed_power(const Scalar& base, const Scalar& z) {
  if (base.is_exact() && z.is_exact()) {
    auto r = exact_pow(base.rational(), z.rational());
    if (!r) return std::nullopt;
    return Scalar(*r);
  }
  return power(base, z);
}

bool base_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  if (a.real_part() != b.real_part()) return a.real_part() < b.real_part();
  return a.imag_part() < b.imag_part();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dsu2
