#include "dsu2/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <string>

#include "dsu2/error.hpp"

namespace dsu2 {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto fail = [&]() -> Error {
    return Error(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num;
    mpz_class den;
    if (!parse_integer(trim(text.substr(0, slash)), num) ||
        !parse_integer(trim(text.substr(slash + 1)), den)) {
      throw fail();
    }
    return Rational(num, den);
  }
  mpz_class whole;
  if (parse_integer(text, whole)) return Rational(whole, mpz_class(1));

  // Decimal with optional exponent, converted exactly.
  std::string_view mantissa = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class e_val;
    if (!parse_integer(text.substr(e + 1), e_val) || !e_val.fits_slong_p()) throw fail();
    exp10 = e_val.get_si();
    mantissa = text.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if ((c == '-' || c == '+') && i == 0) {
      if (c == '-') digits.push_back('-');
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw fail();
    }
  }
  mpz_class num;
  if (!parse_integer(digits, num)) throw fail();
  long shift = exp10 - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) return Rational(num * scale, mpz_class(1));
  return Rational(num, scale);
}

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
  double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long exponent) {
  if (exponent < 0) {
    if (r.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
    return pow(Rational(1) / r, -exponent);
  }
  mpz_class num;
  mpz_class den;
  auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), e);
  return Rational(num, den);
}

std::optional<Rational> exact_root(const Rational& r, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return r;
  if (r.sign() < 0 && k % 2 == 0) return std::nullopt;
  mpz_class num;
  mpz_class den;
  if (mpz_root(num.get_mpz_t(), r.raw().get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), r.raw().get_den_mpz_t(), k) == 0) return std::nullopt;
  return Rational(num, den);
}

std::optional<Rational> exact_pow(const Rational& r, const Rational& exponent) {
  mpz_class p = exponent.numerator();
  mpz_class q = exponent.denominator();
  if (!p.fits_slong_p() || !q.fits_ulong_p()) return std::nullopt;
  if (r.is_zero()) {
    if (exponent.sign() > 0) return Rational(0);
    return std::nullopt;
  }
  auto root = exact_root(r, q.get_ui());
  if (!root) return std::nullopt;
  return pow(*root, p.get_si());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dsu2
