#pragma once

// Data-parallel float kernels. Each kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant chosen at runtime. Setting the environment
// variable DSU2_SIMD=scalar pins the reference path.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace dsu2::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Instruction set the dispatcher uses for this process.
Isa active_isa();
/// Whether the host can run the given variant.
bool isa_available(Isa isa);

/// Real exponential polynomial flattened for batch evaluation:
/// sum_t (sum_k coeffs[t][k] z^k) * exp(z * log_base[t]).
struct FlatExpPoly {
  std::vector<std::vector<double>> coeffs;
  std::vector<double> log_base;  // 0 for a polynomial term
};

/// out[i] = p(z[i]). Sizes of z and out must match.
void eval_exppoly_grid(const FlatExpPoly& p, std::span<const double> z, std::span<double> out);
void eval_exppoly_grid_scalar(const FlatExpPoly& p, std::span<const double> z, std::span<double> out);

/// c (rows x cols) = a (rows x inner) * b (inner x cols), row-major.
void gemm(std::size_t rows, std::size_t inner, std::size_t cols, std::span<const double> a,
          std::span<const double> b, std::span<double> c);
void gemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, std::span<const double> a,
                 std::span<const double> b, std::span<double> c);

#if defined(__x86_64__) || defined(_M_X64)
#define DSU2_HAVE_AVX2_KERNELS 1
void eval_exppoly_grid_avx2(const FlatExpPoly& p, std::span<const double> z, std::span<double> out);
void gemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, std::span<const double> a,
               std::span<const double> b, std::span<double> c);
/// Four-lane exp used by the AVX2 grid evaluator (exposed for testing).
void exp_avx2(std::span<const double> x, std::span<double> out);
#endif

}  // namespace dsu2::kernels
