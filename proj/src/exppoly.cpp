#include "dsu2/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dsu2/error.hpp"

namespace dsu2 {

namespace poly {

void trim(std::vector<Scalar>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = a[i] + b[i];
    } else {
      out[i] = i < a.size() ? a[i] : b[i];
    }
  }
  trim(out);
  return out;
}

std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.empty() || b.empty()) return {};
  Mode m = least_exact(a.front().mode(), b.front().mode());
  std::vector<Scalar> out(a.size() + b.size() - 1, Scalar::zero(m));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::vector<Scalar> scale(const std::vector<Scalar>& a, const Scalar& c) {
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  trim(out);
  return out;
}

Scalar eval(const std::vector<Scalar>& a, const Scalar& z) {
  Scalar acc = Scalar::zero(z.mode());
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace poly

namespace {

constexpr double kBaseMergeTol = 1e-12;

bool same_base(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  double scale = std::max(a.magnitude(), b.magnitude());
  return (a - b).magnitude() <= kBaseMergeTol * scale;
}

}  // namespace

ExpPoly::ExpPoly(std::vector<ExpTerm> terms, Mode mode) : terms_(std::move(terms)), mode_(mode) {
  canonicalize();
}

void ExpPoly::canonicalize() {
  for (const auto& t : terms_) {
    mode_ = least_exact(mode_, t.base.mode());
    for (const auto& c : t.coeffs) mode_ = least_exact(mode_, c.mode());
  }
  for (auto& t : terms_) {
    t.base = t.base.promote(mode_);
    if (!t.base.is_exact() && same_base(t.base, Scalar(1))) t.base = Scalar::one(mode_);
    for (auto& c : t.coeffs) c = c.promote(mode_);
  }
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const ExpTerm& a, const ExpTerm& b) { return base_less(a.base, b.base); });
  std::vector<ExpTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && same_base(merged.back().base, t.base)) {
      merged.back().coeffs = poly::add(merged.back().coeffs, t.coeffs);
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    poly::trim(t.coeffs);
    if (!t.coeffs.empty()) terms_.push_back(std::move(t));
  }
}

ExpPoly ExpPoly::constant(const Scalar& c) { return ExpPoly({{{c}, Scalar::one(c.mode())}}, c.mode()); }

ExpPoly ExpPoly::polynomial(std::vector<Scalar> coeffs) {
  Mode m = Mode::Exact;
  for (const auto& c : coeffs) m = least_exact(m, c.mode());
  return ExpPoly({{std::move(coeffs), Scalar::one(m)}}, m);
}

ExpPoly ExpPoly::identity(Mode mode) {
  return ExpPoly({{{Scalar::zero(mode), Scalar::one(mode)}, Scalar::one(mode)}}, mode);
}

ExpPoly ExpPoly::exponential(const Scalar& base, const Scalar& coeff) {
  return ExpPoly({{{coeff}, base}}, least_exact(base.mode(), coeff.mode()));
}

ExpPoly ExpPoly::q_number(const Scalar& q, const Scalar& a, const Scalar& b) {
  if (q.magnitude() == 0.0 || q.is_one()) {
    throw Error(ErrorKind::InvalidSpec, "q-number needs q > 0 and q != 1");
  }
  Scalar inv = Scalar(1) / q;
  auto up_base = closed_power(q, a);
  auto up_coeff = closed_power(q, b);
  auto down_base = closed_power(inv, a);
  auto down_coeff = closed_power(inv, b);
  if (!up_base || !up_coeff || !down_base || !down_coeff) {
    throw Error(ErrorKind::ClosureError, "q-number [" + a.to_string() + " z + " + b.to_string() +
                                             "] is not exact at q = " + q.to_string());
  }
  Scalar denom = q - inv;
  return ExpPoly::exponential(*up_base, *up_coeff / denom) -
         ExpPoly::exponential(*down_base, *down_coeff / denom);
}

ExpPoly ExpPoly::promote(Mode target) const {
  ExpPoly out = *this;
  out.mode_ = target;
  if (target < mode_) {
    throw Error(ErrorKind::IllegalPromotion, "cannot promote ExpPoly towards a more exact mode");
  }
  out.canonicalize();
  return out;
}

bool ExpPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return t.base.is_one(); });
}

int ExpPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.coeffs.size()) - 1);
  return d;
}

std::vector<Scalar> ExpPoly::poly_coeffs() const {
  if (!is_polynomial()) throw Error(ErrorKind::NotPolynomial, "ExpPoly has exponential terms: " + to_string());
  if (terms_.empty()) return {};
  return terms_.front().coeffs;
}

Scalar ExpPoly::poly_coeff(std::size_t k) const {
  for (const auto& t : terms_) {
    if (t.base.is_one()) return k < t.coeffs.size() ? t.coeffs[k] : Scalar::zero(mode_);
  }
  return Scalar::zero(mode_);
}

std::vector<Scalar> ExpPoly::bases() const {
  std::vector<Scalar> out;
  for (const auto& t : terms_) out.push_back(t.base);
  return out;
}

ExpPoly ExpPoly::chop(double relative_tol) const {
  if (mode_ == Mode::Exact) return *this;
  double biggest = 0.0;
  for (const auto& t : terms_) {
    for (const auto& c : t.coeffs) biggest = std::max(biggest, c.magnitude());
  }
  ExpPoly out = *this;
  for (auto& t : out.terms_) {
    for (auto& c : t.coeffs) {
      if (c.magnitude() <= relative_tol * biggest) c = Scalar::zero(mode_);
    }
  }
  out.canonicalize();
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& t : out.terms_) {
    for (auto& c : t.coeffs) c = -c;
  }
  return out;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return ExpPoly(std::move(terms), least_exact(a.mode_, b.mode_));
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> terms;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) terms.push_back({poly::mul(x.coeffs, y.coeffs), x.base * y.base});
  }
  return ExpPoly(std::move(terms), least_exact(a.mode_, b.mode_));
}

ExpPoly operator*(const Scalar& c, const ExpPoly& p) {
  std::vector<ExpTerm> terms = p.terms_;
  for (auto& t : terms) t.coeffs = poly::scale(t.coeffs, c);
  return ExpPoly(std::move(terms), least_exact(c.mode(), p.mode_));
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (!(x.base == y.base) || x.coeffs.size() != y.coeffs.size()) return false;
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
      if (!(x.coeffs[k] == y.coeffs[k])) return false;
    }
  }
  return true;
}

bool approx_equal(const ExpPoly& a, const ExpPoly& b, double tol) {
  if (a.mode() == Mode::Exact && b.mode() == Mode::Exact) return a == b;
  // Difference canonicalizes with base merging, so compare it to zero.
  ExpPoly diff = a - b;
  for (const auto& t : diff.terms()) {
    for (const auto& c : t.coeffs) {
      if (c.magnitude() > tol) return false;
    }
  }
  return true;
}

std::string ExpPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
      if (t.coeffs[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << t.coeffs[k] << ")";
      if (k == 1) os << "*" << var;
      if (k > 1) os << "*" << var << "^" << k;
      if (!t.base.is_one()) os << "*(" << t.base << ")^" << var;
    }
  }
  return os.str();
}

ExpPoly compose_affine(const ExpPoly& p, const Scalar& alpha, const Scalar& beta) {
  Mode m = least_exact(p.mode(), least_exact(alpha.mode(), beta.mode()));
  std::vector<Scalar> linear{beta.promote(m), alpha.promote(m)};
  std::vector<ExpTerm> terms;
  for (const auto& t : p.terms()) {
    // Horner in the linear polynomial alpha z + beta.
    std::vector<Scalar> acc;
    for (auto it = t.coeffs.rbegin(); it != t.coeffs.rend(); ++it) {
      acc = poly::add(poly::mul(acc, linear), {it->promote(m)});
    }
    if (t.base.is_one()) {
      terms.push_back({std::move(acc), t.base});
      continue;
    }
    auto new_base = closed_power(t.base, alpha);
    auto factor = closed_power(t.base, beta);
    if (!new_base || !factor) {
      throw Error(ErrorKind::ClosureError, "composition of (" + t.base.to_string() + ")^z with " +
                                               alpha.to_string() + " z + " + beta.to_string() +
                                               " leaves the exact domain");
    }
    terms.push_back({poly::scale(acc, *factor), *new_base});
  }
  return ExpPoly(std::move(terms), m);
}

ExpPoly compose_poly(const ExpPoly& p, const ExpPoly& g) {
  if (!p.is_polynomial() || !g.is_polynomial()) {
    throw Error(ErrorKind::NotPolynomial, "polynomial composition needs two pure polynomials");
  }
  Mode m = least_exact(p.mode(), g.mode());
  auto inner = g.poly_coeffs();
  std::vector<Scalar> acc;
  auto outer = p.poly_coeffs();
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) acc = poly::add(poly::mul(acc, inner), {*it});
  return ExpPoly({{std::move(acc), Scalar::one(m)}}, m);
}

ExpPoly compose(const ExpPoly& p, const ExpPoly& g) {
  if (g.is_polynomial() && g.degree() <= 1) return compose_affine(p, g.poly_coeff(1), g.poly_coeff(0));
  return compose_poly(p, g);
}

Scalar eval(const ExpPoly& p, const Scalar& z) {
  Scalar acc = Scalar::zero(least_exact(p.mode(), z.mode()));
  for (const auto& t : p.terms()) {
    Scalar v = poly::eval(t.coeffs, z);
    if (!t.base.is_one()) v = v * power(t.base, z);
    acc += v;
  }
  return acc;
}

}  // namespace dsu2
