#include "dsu2/algebra.hpp"

#include "dsu2/error.hpp"

namespace dsu2 {

AlgebraSpec AlgebraSpec::promote(Mode target) const {
  AlgebraSpec out = *this;
  out.mode = least_exact(mode, target);
  out.s = s.promote(out.mode);
  out.G = G.promote(least_exact(G.mode(), out.mode));
  out.f = f.promote(least_exact(f.mode(), out.mode));
  for (auto& [name, value] : out.params) value = value.promote(least_exact(value.mode(), out.mode));
  return out;
}

ValidationReport validate(const AlgebraSpec& spec) {
  ValidationReport report;
  auto& v = report.violations;
  if (spec.s.is_zero()) v.emplace_back("s must be nonzero");
  if (!spec.G.is_polynomial()) {
    v.emplace_back("G must be a pure polynomial");
  } else if (spec.G.degree() < 1) {
    v.emplace_back("G must have degree >= 1");
  }
  if (!spec.f.is_polynomial() && spec.G.is_polynomial() && spec.G.degree() > 1) {
    v.emplace_back("exponential f requires affine G (degree 1)");
  }
  for (const auto* p : {&spec.G, &spec.f}) {
    for (const auto& base : p->bases()) {
      if (base.mode() == Mode::Complex) continue;
      if (base.sign() <= 0) v.emplace_back("exponential base " + base.to_string() + " must be positive");
    }
  }
  Mode widest = least_exact(spec.s.mode(), least_exact(spec.G.mode(), spec.f.mode()));
  if (widest > spec.mode) {
    v.emplace_back("declared mode " + std::string(to_string(spec.mode)) + " is more exact than its data (" +
                   std::string(to_string(widest)) + ")");
  }
  return report;
}

void require_valid(const AlgebraSpec& spec) {
  auto report = validate(spec);
  if (report.ok()) return;
  std::string msg = "invalid algebra '" + spec.name + "':";
  for (const auto& v : report.violations) msg += " " + v + ";";
  throw Error(ErrorKind::InvalidSpec, msg);
}

ExpPoly iterate_G(const AlgebraSpec& spec, unsigned m) {
  ExpPoly acc = ExpPoly::identity(spec.mode);
  for (unsigned i = 0; i < m; ++i) acc = compose_poly(spec.G, acc);
  return acc;
}

std::vector<Scalar> weights(const AlgebraSpec& spec, const Scalar& eta, unsigned count) {
  std::vector<Scalar> out;
  out.reserve(count);
  Scalar w = eta.promote(least_exact(eta.mode(), spec.mode));
  for (unsigned m = 0; m < count; ++m) {
    out.push_back(w);
    if (m + 1 < count) w = eval(spec.G, w);
  }
  return out;
}

std::vector<Scalar> phi_sequence(const AlgebraSpec& spec, const Scalar& eta, unsigned m_max) {
  Mode mode = least_exact(eta.mode(), spec.mode);
  std::vector<Scalar> out{Scalar::zero(mode)};
  Scalar w = eta.promote(mode);
  for (unsigned m = 0; m < m_max; ++m) {
    out.push_back(eval(spec.f, w) + spec.s * out.back());
    w = eval(spec.G, w);
  }
  return out;
}

Scalar phi_numeric(const AlgebraSpec& spec, const Scalar& eta, unsigned m) {
  return phi_sequence(spec, eta, m).back();
}

std::vector<ExpPoly> phi_symbolic_sequence(const AlgebraSpec& spec, unsigned m_max) {
  std::vector<ExpPoly> out{ExpPoly::zero(spec.mode)};
  ExpPoly inner = ExpPoly::identity(spec.mode);
  for (unsigned m = 0; m < m_max; ++m) {
    out.push_back(compose(spec.f, inner) + spec.s * out.back());
    if (m + 1 < m_max) inner = compose_poly(spec.G, inner);
  }
  return out;
}

ExpPoly phi_symbolic(const AlgebraSpec& spec, unsigned m) { return phi_symbolic_sequence(spec, m).back(); }

}  // namespace dsu2
