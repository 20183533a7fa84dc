#include <cmath>
#include <cstdlib>
#include <cstring>

#include "dsu2/kernels.hpp"

namespace dsu2::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#ifdef DSU2_HAVE_AVX2_KERNELS
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("DSU2_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

void eval_exppoly_grid_scalar(const FlatExpPoly& p, std::span<const double> z, std::span<double> out) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    double x = z[i];
    double acc = 0.0;
    for (std::size_t t = 0; t < p.coeffs.size(); ++t) {
      const auto& c = p.coeffs[t];
      double v = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
      if (p.log_base[t] != 0.0) v *= std::exp(x * p.log_base[t]);
      acc += v;
    }
    out[i] = acc;
  }
}

void gemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, std::span<const double> a,
                 std::span<const double> b, std::span<double> c) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      double aik = a[i * inner + k];
      const double* brow = &b[k * cols];
      double* crow = &c[i * cols];
      for (std::size_t j = 0; j < cols; ++j) crow[j] += aik * brow[j];
    }
  }
}

void eval_exppoly_grid(const FlatExpPoly& p, std::span<const double> z, std::span<double> out) {
#ifdef DSU2_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return eval_exppoly_grid_avx2(p, z, out);
#endif
  eval_exppoly_grid_scalar(p, z, out);
}

void gemm(std::size_t rows, std::size_t inner, std::size_t cols, std::span<const double> a,
          std::span<const double> b, std::span<double> c) {
#ifdef DSU2_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return gemm_avx2(rows, inner, cols, a, b, c);
#endif
  gemm_scalar(rows, inner, cols, a, b, c);
}

}  // namespace dsu2::kernels
