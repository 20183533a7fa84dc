#include "dsu2/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dsu2/error.hpp"
#include "dsu2/kernels.hpp"

namespace dsu2 {

void check_config(const RootSearchConfig& cfg) {
  if (!(cfg.lo < cfg.hi)) throw Error(ErrorKind::InvalidSpec, "root search interval needs lo < hi");
  if (cfg.scan_steps < 2) throw Error(ErrorKind::InvalidSpec, "root search needs scan_steps >= 2");
}

namespace {

/// Primitive integer coefficients (ascending) of a rational polynomial.
std::vector<mpz_class> integer_coeffs(const ExpPoly& p) {
  auto coeffs = p.poly_coeffs();
  mpz_class lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().raw().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : coeffs) {
    const Rational& r = c.rational();
    out.push_back(r.numerator() * (lcm / r.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

/// Positive divisors of |n| (n != 0), or nullopt if n could not be factored
/// by trial division plus a primality test.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long d = 2; d <= 1000000UL; ++d) {
    if (n == 1) break;
    if (mpz_class(d) * d > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) factors.emplace_back(mpz_class(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exp] : factors) {
    std::size_t count = divs.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Whether num/den is a root of the integer polynomial (den > 0).
bool is_root(const std::vector<mpz_class>& a, const mpz_class& num, const mpz_class& den) {
  // Homogenized Horner: sum a_i num^i den^(n-i).
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * num + a[i] * den_pow;
    den_pow *= den;
  }
  return acc == 0;
}

/// Divides the integer polynomial by (den z - num) in place; num/den must be
/// a root.
void deflate(std::vector<mpz_class>& a, const mpz_class& num, const mpz_class& den) {
  std::size_t n = a.size() - 1;
  std::vector<mpz_class> quotient(n);
  mpz_class carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    // a_{i+1} + carry = den * q_i
    mpz_class top = a[i + 1] + carry;
    mpz_divexact(quotient[i].get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
    carry = quotient[i] * num;
  }
  a = std::move(quotient);
}

std::vector<std::pair<mpz_class, mpz_class>> candidates_from_divisors(const std::vector<mpz_class>& a) {
  auto num_divs = divisors(a.front());
  auto den_divs = divisors(a.back());
  if (!num_divs || !den_divs) return {};
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (const auto& q : *den_divs) {
    for (const auto& p : *num_divs) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      out.emplace_back(p, q);
      out.emplace_back(-p, q);
    }
  }
  return out;
}

/// Fallback when factoring fails: continued-fraction convergents of the real
/// numeric roots whose denominators divide the leading coefficient.
std::vector<std::pair<mpz_class, mpz_class>> candidates_from_numeric(const std::vector<mpz_class>& a) {
  std::vector<Scalar> coeffs;
  for (const auto& c : a) coeffs.emplace_back(Rational(c, mpz_class(1)));
  std::vector<std::pair<mpz_class, mpz_class>> out;
  mpz_class lead = abs(a.back());
  for (auto root : numeric_poly_roots(ExpPoly::polynomial(coeffs))) {
    if (std::fabs(root.imag()) > 1e-6 * (1.0 + std::abs(root))) continue;
    double x = root.real();
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 40 && k <= lead; ++iter) {
      if (mpz_divisible_p(lead.get_mpz_t(), k.get_mpz_t()) != 0) out.emplace_back(h, k);
      if (frac < 1e-12) break;
      double inv = 1.0 / frac;
      auto digit = static_cast<long>(std::floor(inv));
      frac = inv - std::floor(inv);
      mpz_class h_next = digit * h + h_prev;
      mpz_class k_next = digit * k + k_prev;
      h_prev = h;
      h = h_next;
      k_prev = k;
      k = k_next;
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const ExpPoly& p) {
  if (p.mode() != Mode::Exact) throw Error(ErrorKind::NotPolynomial, "rational roots need exact coefficients");
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has every number as a root");
  auto a = integer_coeffs(p);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (a.size() >= 2) {
    auto candidates = candidates_from_divisors(a);
    if (candidates.empty()) candidates = candidates_from_numeric(a);
    for (const auto& [num, den] : candidates) {
      if (a.size() < 2) break;
      if (!is_root(a, num, den)) continue;
      roots.emplace_back(num, den);
      while (a.size() >= 2 && is_root(a, num, den)) deflate(a, num, den);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

Complex horner(const std::vector<Complex>& a, Complex z) {
  Complex acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& a) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<double>(i));
  return d;
}

}  // namespace

std::vector<Complex> numeric_poly_roots(const ExpPoly& p, double root_tol) {
  if (!p.is_polynomial()) throw Error(ErrorKind::NotPolynomial, "numeric_poly_roots needs a pure polynomial");
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has every number as a root");
  std::vector<Complex> a;
  for (const auto& c : p.chop(1e-14).poly_coeffs()) a.push_back(c.to_complex());

  std::vector<Complex> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == Complex(0.0)) ++low;
  roots.insert(roots.end(), low, Complex(0.0));
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  const std::size_t n = a.size() - 1;
  if (n == 1) {
    roots.push_back(-a[0] / a[1]);
  } else if (n >= 2) {
    auto da = derivative(a);
    // Initial guesses on a circle enclosing all roots (Fujiwara-style bound).
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      radius = std::max(radius, std::pow(std::abs(a[i] / a[n]), 1.0 / static_cast<double>(n - i)));
    }
    radius = std::max(2.0 * radius, 1e-3);
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
      double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z[k] = std::polar(radius * 0.5, angle);
    }
    for (int iter = 0; iter < 1000; ++iter) {
      double biggest_step = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        Complex pv = horner(a, z[k]);
        if (pv == Complex(0.0)) continue;
        Complex ratio = pv / horner(da, z[k]);
        Complex repulsion = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        }
        Complex step = ratio / (1.0 - ratio * repulsion);
        z[k] -= step;
        biggest_step = std::max(biggest_step, std::abs(step) / (1.0 + std::abs(z[k])));
      }
      if (biggest_step < 1e-16) break;
    }
    for (auto& r : z) {
      for (int polish = 0; polish < 4; ++polish) {
        Complex d = horner(da, r);
        if (d == Complex(0.0)) break;
        Complex step = horner(a, r) / d;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        Complex candidate = r - step;
        if (std::abs(horner(a, candidate)) >= std::abs(horner(a, r))) break;
        r = candidate;
      }
      if (std::fabs(r.imag()) <= root_tol * 1e-3 * (1.0 + std::abs(r))) r.imag(0.0);
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

namespace {

kernels::FlatExpPoly flatten_real(const ExpPoly& p) {
  kernels::FlatExpPoly flat;
  for (const auto& t : p.terms()) {
    if (t.base.imag_part() != 0.0 || t.base.real_part() <= 0.0) {
      throw Error(ErrorKind::UnsupportedRootClass, "real root scan needs positive real bases");
    }
    std::vector<double> c;
    for (const auto& x : t.coeffs) {
      if (x.imag_part() != 0.0) throw Error(ErrorKind::UnsupportedRootClass, "real root scan needs real coefficients");
      c.push_back(x.real_part());
    }
    flat.coeffs.push_back(std::move(c));
    flat.log_base.push_back(t.base.is_one() ? 0.0 : std::log(t.base.real_part()));
  }
  return flat;
}

double eval_flat(const kernels::FlatExpPoly& p, double z) {
  double out = 0.0;
  kernels::eval_exppoly_grid_scalar(p, std::span<const double>(&z, 1), std::span<double>(&out, 1));
  return out;
}

}  // namespace

double eval_real(const ExpPoly& p, double z) { return eval_flat(flatten_real(p), z); }

std::vector<double> exp_real_roots(const ExpPoly& p, const RootSearchConfig& cfg) {
  check_config(cfg);
  if (p.is_zero()) return {};
  auto flat = flatten_real(p);
  const std::size_t n = cfg.scan_steps;
  std::vector<double> grid(n + 1);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    grid[i] = cfg.lo + (cfg.hi - cfg.lo) * static_cast<double>(i) / static_cast<double>(n);
  }
  kernels::eval_exppoly_grid(flat, grid, values);

  std::vector<double> roots;
  for (std::size_t i = 0; i <= n; ++i) {
    if (values[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (i == n || values[i + 1] == 0.0 || std::signbit(values[i]) == std::signbit(values[i + 1])) continue;
    double lo = grid[i];
    double hi = grid[i + 1];
    bool lo_negative = std::signbit(values[i]);
    // down to adjacent doubles
    while (true) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      double v = eval_flat(flat, mid);
      if (v == 0.0) {
        lo = hi = mid;
        break;
      }
      if (std::signbit(v) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(std::abs(eval_flat(flat, lo)) <= std::abs(eval_flat(flat, hi)) ? lo : hi);
  }
  return roots;
}

}  // namespace dsu2
