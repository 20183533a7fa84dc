#include "dsu2/casimir.hpp"

#include <algorithm>
#include <cmath>

#include "dsu2/error.hpp"

namespace dsu2 {

namespace {

constexpr std::size_t kMaxBaseOrbit = 8;

Scalar conj(const Scalar& x) {
  return x.mode() == Mode::Complex ? Scalar(std::conj(x.to_complex())) : x;
}

bool same_base(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return (a - b).magnitude() <= 1e-12 * std::max(a.magnitude(), b.magnitude());
}

/// 1, the bases of f, and their orbits under b -> b^alpha.
std::vector<Scalar> ansatz_bases(const AlgebraSpec& spec) {
  std::vector<Scalar> bases{Scalar::one(spec.mode)};
  auto add = [&](const Scalar& b) {
    if (std::none_of(bases.begin(), bases.end(), [&](const Scalar& x) { return same_base(x, b); })) {
      bases.push_back(b);
      return true;
    }
    return false;
  };
  bool affine = spec.G.degree() == 1;
  Scalar alpha = spec.G.poly_coeff(1);
  for (const auto& b : spec.f.bases()) {
    Scalar current = b;
    add(current);
    if (!affine || alpha.is_one()) continue;
    for (std::size_t step = 0; step < kMaxBaseOrbit; ++step) {
      auto next = closed_power(current, alpha);
      if (!next) {
        throw Error(ErrorKind::ClosureError,
                    "(" + current.to_string() + ")^" + alpha.to_string() + " leaves the exact domain");
      }
      if (!add(*next)) break;
      current = *next;
    }
  }
  std::sort(bases.begin(), bases.end(), base_less);
  return bases;
}

struct Key {
  Scalar base;
  std::size_t degree;
};

std::size_t key_index(std::vector<Key>& keys, const Scalar& base, std::size_t degree) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i].degree == degree && same_base(keys[i].base, base)) return i;
  }
  keys.push_back({base, degree});
  return keys.size() - 1;
}

std::optional<CasimirSolution> solve_at_degree(const AlgebraSpec& spec, const std::vector<Scalar>& bases,
                                               unsigned degree) {
  const Mode mode = spec.mode;
  std::vector<ExpPoly> ansatz;
  for (const auto& b : bases) {
    for (unsigned j = 0; j <= degree; ++j) {
      std::vector<Scalar> coeffs(j + 1, Scalar::zero(mode));
      coeffs[j] = Scalar::one(mode);
      ansatz.push_back(ExpPoly({{coeffs, b}}, mode));
    }
  }
  std::vector<ExpPoly> images;
  for (const auto& e : ansatz) images.push_back(spec.s * e - compose(e, spec.G));

  std::vector<Key> keys;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& t : images[j].terms()) {
      for (std::size_t d = 0; d < t.coeffs.size(); ++d) {
        if (!t.coeffs[d].is_zero()) columns[j].emplace_back(key_index(keys, t.base, d), t.coeffs[d]);
      }
    }
  }
  std::vector<std::pair<std::size_t, Scalar>> rhs_entries;
  for (const auto& t : spec.f.terms()) {
    for (std::size_t d = 0; d < t.coeffs.size(); ++d) {
      if (!t.coeffs[d].is_zero()) rhs_entries.emplace_back(key_index(keys, t.base, d), t.coeffs[d]);
    }
  }

  Matrix a(keys.size(), ansatz.size(), mode);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [row, v] : columns[j]) a.set(row, j, v);
  }
  std::vector<Scalar> rhs(keys.size(), Scalar::zero(mode));
  for (const auto& [row, v] : rhs_entries) rhs[row] = v.promote(mode);

  LinearSolution sol;
  try {
    sol = solve_linear(a, rhs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Inconsistent) return std::nullopt;
    throw;
  }

  // Remove the kernel component: x -= K c with (K^H K) c = K^H x.
  std::vector<Scalar> x = sol.solution;
  const auto& kernel = sol.kernel_basis;
  if (!kernel.empty()) {
    Matrix gram(kernel.size(), kernel.size(), mode);
    std::vector<Scalar> proj(kernel.size(), Scalar::zero(mode));
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      for (std::size_t j = 0; j < kernel.size(); ++j) {
        Scalar acc = Scalar::zero(mode);
        for (std::size_t r = 0; r < x.size(); ++r) acc += conj(kernel[i][r]) * kernel[j][r];
        gram.set(i, j, acc);
      }
      for (std::size_t r = 0; r < x.size(); ++r) proj[i] += conj(kernel[i][r]) * x[r];
    }
    auto c = solve_linear(gram, proj).solution;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      for (std::size_t r = 0; r < x.size(); ++r) x[r] -= c[i] * kernel[i][r];
    }
  }

  CasimirSolution out;
  out.rho = ExpPoly::zero(mode);
  for (std::size_t j = 0; j < ansatz.size(); ++j) {
    if (!x[j].is_zero()) out.rho += x[j] * ansatz[j];
  }
  if (mode != Mode::Exact) out.rho = out.rho.chop(1e-15);
  out.kernel_dim = static_cast<unsigned>(kernel.size());
  out.residual = spec.s * out.rho - compose(out.rho, spec.G) - spec.f;
  out.max_degree = degree;
  return out;
}

}  // namespace

CasimirSolution solve_rho(const AlgebraSpec& spec, std::optional<unsigned> max_degree) {
  require_valid(spec);
  auto bases = ansatz_bases(spec);
  unsigned base_degree = static_cast<unsigned>(std::max(spec.f.degree(), -1) + 1);
  unsigned first = max_degree.value_or(base_degree);
  unsigned last = max_degree.value_or(base_degree + 2);
  for (unsigned d = first; d <= last; ++d) {
    if (auto sol = solve_at_degree(spec, bases, d)) return *sol;
  }
  throw Error(ErrorKind::NoSolutionInAnsatz,
              "no exponential-polynomial rho up to degree " + std::to_string(last) + " for '" + spec.name + "'");
}

Scalar casimir_eigenvalue(const AlgebraSpec& spec, const ExpPoly& rho, const Scalar& eta, unsigned m) {
  return pow(spec.s, static_cast<long>(m)) * eval(rho, eta);
}

Matrix casimir_matrix(const ModuleRep& rep, const ExpPoly& rho) {
  return rep.jplus * rep.jminus + apply_exppoly_to_diagonal(rho, rep.jzero);
}

namespace {

void require_square_module(const ModuleRep& rep) {
  for (const auto* m : {&rep.jplus, &rep.jzero, &rep.jminus}) {
    if (m->rows() != rep.dim || m->cols() != rep.dim) {
      throw Error(ErrorKind::DimensionMismatch, "module matrices must be dim x dim");
    }
  }
}

bool is_minus_one(const Scalar& s) {
  return s.is_exact() ? s == Scalar(-1) : (s - Scalar(-1)).magnitude() <= 1e-14;
}

}  // namespace

CheckReport check_casimir_matrix(const ModuleRep& rep, const ExpPoly& rho, double tol) {
  require_square_module(rep);
  const Scalar& s = rep.spec.s;
  Matrix c = casimir_matrix(rep, rho);
  CheckReport report;
  report.add_matrix("C_J0", commutator(c, rep.jzero), tol);
  report.add_matrix("Jminus_C_s", s_commutator(rep.jminus, c, s), tol);
  report.add_matrix("C_Jplus_s", s_commutator(c, rep.jplus, s), tol);

  std::vector<Scalar> expected;
  for (unsigned m = 0; m < rep.dim; ++m) expected.push_back(casimir_eigenvalue(rep.spec, rho, rep.eta, m));
  report.add_matrix("C_eigenvalues", c - Matrix::diagonal(expected), tol);

  if (is_minus_one(s)) {
    Matrix c2 = c * c;
    report.add_matrix("C2_J0", commutator(c2, rep.jzero), tol);
    report.add_matrix("Jminus_C2", commutator(rep.jminus, c2), tol);
    report.add_matrix("C2_Jplus", commutator(c2, rep.jplus), tol);
  }
  return report;
}

CheckReport check_root_of_unity_casimir(const ModuleRep& rep, const ExpPoly& rho, unsigned k, double tol) {
  require_square_module(rep);
  if (k == 0) throw Error(ErrorKind::InvalidSpec, "root-of-unity order k must be positive");
  CheckReport report;

  CheckItem unity;
  unity.name = "s_root_of_unity";
  Scalar sk = pow(rep.spec.s, static_cast<long>(k));
  unity.residual = (sk - Scalar(1)).magnitude();
  unity.exact_zero = sk.is_exact() && sk == Scalar(1);
  unity.passed = sk.is_exact() ? unity.exact_zero : unity.residual < tol;
  unity.detail = "s^" + std::to_string(k) + " = " + sk.to_string();
  report.add(unity);

  Matrix d = matrix_power(casimir_matrix(rep, rho), k);
  report.add_matrix("D_J0", commutator(d, rep.jzero), tol);
  report.add_matrix("D_Jplus", commutator(d, rep.jplus), tol);
  report.add_matrix("D_Jminus", commutator(d, rep.jminus), tol);
  Scalar eigen = pow(eval(rho, rep.eta), static_cast<long>(k));
  report.add_matrix("D_eigenvalues", d - eigen * Matrix::identity(rep.dim, d.mode()), tol);
  return report;
}

}  // namespace dsu2
