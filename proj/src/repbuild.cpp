#include "dsu2/repbuild.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "dsu2/error.hpp"

namespace dsu2 {

std::string_view to_string(BasisKind kind) {
  return kind == BasisKind::Normalized ? "normalized" : "unnormalized";
}

namespace {

bool vanishes(const Scalar& v, double side_tol) {
  return v.is_exact() ? v.is_zero() : v.magnitude() <= side_tol;
}

}  // namespace

std::optional<unsigned> failed_side_condition(const std::vector<Scalar>& phis, unsigned dim, double side_tol) {
  for (unsigned m = 1; m < dim && m < phis.size(); ++m) {
    if (vanishes(phis[m], side_tol)) return m;
  }
  return std::nullopt;
}

ModuleRep build_module(const AlgebraSpec& spec, const Scalar& eta, unsigned dim, BasisKind basis,
                       double side_tol) {
  require_valid(spec);
  if (dim == 0) throw Error(ErrorKind::InvalidSpec, "module dimension must be at least 1");
  Mode mode = least_exact(spec.mode, eta.mode());
  if (basis == BasisKind::Normalized) {
    if (mode == Mode::Complex) throw Error(ErrorKind::InvalidSpec, "normalized basis needs a real scalar mode");
    mode = Mode::Real;
  }

  ModuleRep rep;
  rep.spec = spec;
  rep.eta = eta.promote(least_exact(spec.mode, eta.mode()));
  rep.dim = dim;
  rep.basis = basis;
  rep.weights = weights(spec, rep.eta, dim);
  rep.phis = phi_sequence(spec, rep.eta, dim);

  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = i + 1; j < dim; ++j) {
      if (approx_equal(rep.weights[i], rep.weights[j], 1e-12)) {
        rep.warnings.push_back("repeated weight at levels " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }

  rep.jzero = Matrix(dim, dim, mode);
  rep.jplus = Matrix(dim, dim, mode);
  rep.jminus = Matrix(dim, dim, mode);
  for (unsigned m = 0; m < dim; ++m) rep.jzero.set(m, m, rep.weights[m].promote(least_exact(mode, rep.weights[m].mode())));

  if (basis == BasisKind::Unnormalized) {
    for (unsigned m = 0; m + 1 < dim; ++m) rep.jplus.set(m + 1, m, Scalar::one(mode));
    for (unsigned m = 1; m < dim; ++m) rep.jminus.set(m - 1, m, rep.phis[m]);
    return rep;
  }

  if (auto bad = failed_side_condition(rep.phis, dim, side_tol)) {
    throw Error(ErrorKind::DegenerateWeight, "Phi(eta, " + std::to_string(*bad) +
                                                 ") vanishes; normalized basis does not exist");
  }
  for (unsigned m = 1; m < dim; ++m) {
    double phi = rep.phis[m].to_double();
    double root = std::sqrt(std::fabs(phi));
    rep.jplus.set(m, m - 1, Scalar(root));
    rep.jminus.set(m - 1, m, Scalar(phi < 0.0 ? -root : root));
  }
  return rep;
}

CheckReport verify_module(const ModuleRep& rep, double tol, double side_tol) {
  const AlgebraSpec& spec = rep.spec;
  const Matrix& jp = rep.jplus;
  const Matrix& j0 = rep.jzero;
  const Matrix& jm = rep.jminus;
  const std::size_t n = rep.dim;

  CheckReport report;
  Matrix g_of_j0 = apply_exppoly_to_diagonal(spec.G, j0);
  Matrix f_of_j0 = apply_exppoly_to_diagonal(spec.f, j0);
  report.add_matrix("J0_Jplus", j0 * jp - jp * g_of_j0, tol);
  report.add_matrix("Jminus_J0", jm * j0 - g_of_j0 * jm, tol);
  report.add_matrix("Jminus_Jplus", jm * jp - spec.s * (jp * jm) - f_of_j0, tol);

  Matrix product = Matrix::identity(n, j0.mode());
  for (const auto& w : rep.weights) product = product * (j0 - w * Matrix::identity(n, j0.mode()));
  report.add_matrix("cayley_hamilton", product, tol);
  report.add_matrix("Jplus_nilpotent", matrix_power(jp, static_cast<unsigned>(n)), tol);
  report.add_matrix("Jminus_nilpotent", matrix_power(jm, static_cast<unsigned>(n)), tol);

  CheckItem root;
  root.name = "phi_root";
  const Scalar& top = rep.phis.at(n);
  root.residual = top.magnitude();
  root.exact_zero = top.is_exact() && top.is_zero();
  root.passed = top.is_exact() ? root.exact_zero : root.residual < tol;
  root.detail = "Phi(eta, " + std::to_string(n) + ") = " + top.to_string();
  report.add(root);

  CheckItem side;
  side.name = "side_condition";
  double smallest = 0.0;
  for (unsigned m = 1; m < n; ++m) {
    double v = rep.phis[m].magnitude();
    smallest = m == 1 ? v : std::min(smallest, v);
  }
  side.residual = smallest;
  auto failed = failed_side_condition(rep.phis, rep.dim, side_tol);
  side.passed = !failed.has_value();
  side.detail = failed ? "Phi(eta, " + std::to_string(*failed) + ") vanishes" : "Phi(eta, m) != 0 for 0 < m < N";
  report.add(side);
  return report;
}

unsigned DimSearchResult::valid_count() const {
  return static_cast<unsigned>(std::count_if(roots.begin(), roots.end(), [](const RootInfo& r) { return r.valid; }));
}

namespace {

RootInfo classify(const AlgebraSpec& spec, const Scalar& eta, unsigned N, bool exact, double side_tol) {
  RootInfo info;
  info.eta = eta;
  info.exact = exact;
  AlgebraSpec evaluating = spec.promote(eta.mode());
  auto phis = phi_sequence(evaluating, eta, N);
  info.residual = phis[N].magnitude();
  info.failed_side_condition_at = failed_side_condition(phis, N, side_tol);
  info.valid = !info.failed_side_condition_at.has_value();
  return info;
}

bool close(const Complex& a, const Complex& b, double root_tol) {
  return std::abs(a - b) <= std::max(root_tol, 1e-7 * (1.0 + std::abs(a)));
}

}  // namespace

DimSearchResult search_dimension(const AlgebraSpec& spec, unsigned N, const RootSearchConfig& cfg, double side_tol) {
  require_valid(spec);
  check_config(cfg);
  DimSearchResult result;
  result.N = N;
  result.phi = phi_symbolic(spec, N);
  const ExpPoly& p = result.phi;
  if (p.is_zero()) {
    result.phi_identically_zero = true;
    result.notes.emplace_back("Phi vanishes identically");
    return result;
  }

  std::vector<Complex> taken;
  if (p.is_polynomial()) {
    if (p.mode() == Mode::Exact) {
      for (const auto& r : rational_roots(p)) {
        result.roots.push_back(classify(spec, Scalar(r), N, true, side_tol));
        taken.emplace_back(r.to_double(), 0.0);
      }
    }
    bool keep_complex = cfg.want_complex || spec.mode == Mode::Complex;
    std::vector<Complex> numeric;
    for (const auto& z : numeric_poly_roots(p, cfg.root_tol)) {
      bool duplicate = std::any_of(taken.begin(), taken.end(), [&](const Complex& t) { return close(t, z, cfg.root_tol); });
      if (duplicate) continue;
      taken.push_back(z);
      numeric.push_back(z);
    }
    for (const auto& z : numeric) {
      bool is_real = std::fabs(z.imag()) <= 1e-8 * (1.0 + std::abs(z));
      if (!is_real && !keep_complex) continue;
      Scalar eta = spec.mode == Mode::Complex ? Scalar(is_real ? Complex(z.real(), 0.0) : z)
                                              : (is_real ? Scalar(z.real()) : Scalar(z));
      result.roots.push_back(classify(spec, eta, N, false, side_tol));
    }
  } else {
    try {
      for (double x : exp_real_roots(p.promote(least_exact(p.mode(), Mode::Real)), cfg)) {
        Complex z(x, 0.0);
        bool duplicate = std::any_of(taken.begin(), taken.end(), [&](const Complex& t) { return close(t, z, cfg.root_tol); });
        if (duplicate) continue;
        taken.push_back(z);
        Scalar eta = spec.mode == Mode::Complex ? Scalar(z) : Scalar(x);
        result.roots.push_back(classify(spec, eta, N, false, side_tol));
      }
      result.notes.emplace_back("exponential Phi: real roots by grid scan on [" + std::to_string(cfg.lo) + ", " +
                                std::to_string(cfg.hi) + "]");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedRootClass) throw;
      result.notes.emplace_back(std::string("UnsupportedRootClass: ") + e.what());
    }
  }
  return result;
}

std::vector<DimSearchResult> find_dimensions(const AlgebraSpec& spec, unsigned N_max, const RootSearchConfig& cfg,
                                             unsigned jobs, double side_tol) {
  std::vector<DimSearchResult> results(N_max);
  jobs = std::max(1U, std::min(jobs, N_max));
  if (jobs == 1) {
    for (unsigned N = 1; N <= N_max; ++N) results[N - 1] = search_dimension(spec, N, cfg, side_tol);
    return results;
  }
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (unsigned N = 1 + w; N <= N_max; N += jobs) results[N - 1] = search_dimension(spec, N, cfg, side_tol);
    }));
  }
  for (auto& w : workers) w.get();
  return results;
}

unsigned multiplicity_report(const AlgebraSpec& spec, unsigned N, const RootSearchConfig& cfg) {
  return search_dimension(spec, N, cfg).valid_count();
}

}  // namespace dsu2
