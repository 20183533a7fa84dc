// Compiled with -mavx2 (no FMA, so products round exactly like the scalar
// reference). Only entered after the runtime CPU check in kernels_scalar.cpp.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "dsu2/kernels.hpp"

namespace dsu2::kernels {

namespace {

// exp(x) = 2^n * exp(r), r = x - n ln2, |r| <= ln2/2, Taylor degree 13.
__m256d exp4(__m256d x) {
  const __m256d hi_cut = _mm256_set1_pd(709.782712893384);
  const __m256d lo_cut = _mm256_set1_pd(-708.3964185322641);
  const __m256d inv_ln2 = _mm256_set1_pd(1.4426950408889634);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);

  __m256d over = _mm256_cmp_pd(x, hi_cut, _CMP_GT_OQ);
  __m256d under = _mm256_cmp_pd(x, lo_cut, _CMP_LT_OQ);
  __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo_cut), hi_cut);

  __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, inv_ln2), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_sub_pd(_mm256_sub_pd(xc, _mm256_mul_pd(n, ln2_hi)), _mm256_mul_pd(n, ln2_lo));

  static constexpr std::array<double, 14> kTaylor = {
      1.0,
      1.0,
      1.0 / 2,
      1.0 / 6,
      1.0 / 24,
      1.0 / 120,
      1.0 / 720,
      1.0 / 5040,
      1.0 / 40320,
      1.0 / 362880,
      1.0 / 3628800,
      1.0 / 39916800,
      1.0 / 479001600,
      1.0 / 6227020800.0,
  };
  __m256d p = _mm256_set1_pd(kTaylor.back());
  for (int k = static_cast<int>(kTaylor.size()) - 2; k >= 0; --k) {
    p = _mm256_add_pd(_mm256_mul_pd(p, r), _mm256_set1_pd(kTaylor[static_cast<std::size_t>(k)]));
  }

  // 2^n split as 2^(n/2) * 2^(n - n/2) so n near the range ends stays normal.
  __m128i ni = _mm256_cvtpd_epi32(n);
  __m128i half = _mm_srai_epi32(ni, 1);
  __m128i rest = _mm_sub_epi32(ni, half);
  auto pow2 = [](__m128i e) {
    __m256i e64 = _mm256_cvtepi32_epi64(e);
    e64 = _mm256_add_epi64(e64, _mm256_set1_epi64x(1023));
    return _mm256_castsi256_pd(_mm256_slli_epi64(e64, 52));
  };
  __m256d result = _mm256_mul_pd(_mm256_mul_pd(p, pow2(half)), pow2(rest));
  result = _mm256_blendv_pd(result, _mm256_set1_pd(std::numeric_limits<double>::infinity()), over);
  result = _mm256_blendv_pd(result, _mm256_setzero_pd(), under);
  return result;
}

__m256d eval4(const FlatExpPoly& p, __m256d x) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t t = 0; t < p.coeffs.size(); ++t) {
    const auto& c = p.coeffs[t];
    __m256d v = _mm256_setzero_pd();
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = _mm256_add_pd(_mm256_mul_pd(v, x), _mm256_set1_pd(*it));
    if (p.log_base[t] != 0.0) v = _mm256_mul_pd(v, exp4(_mm256_mul_pd(x, _mm256_set1_pd(p.log_base[t]))));
    acc = _mm256_add_pd(acc, v);
  }
  return acc;
}

}  // namespace

void exp_avx2(std::span<const double> x, std::span<double> out) {
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) _mm256_storeu_pd(&out[i], exp4(_mm256_loadu_pd(&x[i])));
  if (i < x.size()) {
    alignas(32) std::array<double, 4> in{};
    alignas(32) std::array<double, 4> res{};
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(i), x.end(), in.begin());
    _mm256_store_pd(res.data(), exp4(_mm256_load_pd(in.data())));
    std::copy_n(res.begin(), x.size() - i, out.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

void eval_exppoly_grid_avx2(const FlatExpPoly& p, std::span<const double> z, std::span<double> out) {
  std::size_t i = 0;
  for (; i + 4 <= z.size(); i += 4) _mm256_storeu_pd(&out[i], eval4(p, _mm256_loadu_pd(&z[i])));
  if (i < z.size()) {
    alignas(32) std::array<double, 4> in{};
    alignas(32) std::array<double, 4> res{};
    std::copy(z.begin() + static_cast<std::ptrdiff_t>(i), z.end(), in.begin());
    _mm256_store_pd(res.data(), eval4(p, _mm256_load_pd(in.data())));
    std::copy_n(res.begin(), z.size() - i, out.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

void gemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, std::span<const double> a,
               std::span<const double> b, std::span<double> c) {
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rows * cols), 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double* crow = &c[i * cols];
    for (std::size_t k = 0; k < inner; ++k) {
      double aik = a[i * inner + k];
      __m256d av = _mm256_set1_pd(aik);
      const double* brow = &b[k * cols];
      std::size_t j = 0;
      for (; j + 4 <= cols; j += 4) {
        __m256d acc = _mm256_loadu_pd(crow + j);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(av, _mm256_loadu_pd(brow + j)));
        _mm256_storeu_pd(crow + j, acc);
      }
      for (; j < cols; ++j) crow[j] += aik * brow[j];
    }
  }
}

}  // namespace dsu2::kernels
