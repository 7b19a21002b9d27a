#include "cohn/simd/fp_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define COHN_HAVE_X86 1
#else
#define COHN_HAVE_X86 0
#endif

namespace cohn::simd::avx2 {

#if COHN_HAVE_X86

namespace {

// x < 2^32, p < 2^16: q = (x * magic) >> 32 undershoots floor(x / p) by at
// most one, so a single conditional subtraction finishes the reduction.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256i magic, __m256i p) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, magic), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), magic);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                                              std::uint32_t a, const Modulus& m) {
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(m.p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m.magic));
  std::size_t i = 0;
  for (; i + 8 <= y.size(); i += 8) {
    auto* py = reinterpret_cast<__m256i*>(y.data() + i);
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    const __m256i vy = _mm256_loadu_si256(py);
    _mm256_storeu_si256(py, reduce(_mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx)), vm, vp));
  }
  for (; i < y.size(); ++i) y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{a} * x[i]) % m.p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m) {
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(m.p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m.magic));
  std::size_t i = 0;
  for (; i + 8 <= y.size(); i += 8) {
    auto* py = reinterpret_cast<__m256i*>(y.data() + i);
    _mm256_storeu_si256(py, reduce(_mm256_mullo_epi32(va, _mm256_loadu_si256(py)), vm, vp));
  }
  for (; i < y.size(); ++i) y[i] = static_cast<std::uint32_t>(std::uint64_t{a} * y[i] % m.p);
}

__attribute__((target("avx2"))) bool all_zero(std::span<const std::uint32_t> y) noexcept {
  std::size_t i = 0;
  for (; i + 8 <= y.size(); i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    if (!_mm256_testz_si256(v, v)) return false;
  }
  for (; i < y.size(); ++i)
    if (y[i]) return false;
  return true;
}

#else

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, const Modulus& m) {
  scalar::axpy_mod(y, x, a, m);
}
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, const Modulus& m) { scalar::scale_mod(y, a, m); }
bool all_zero(std::span<const std::uint32_t> y) noexcept { return scalar::all_zero(y); }

#endif

}  // namespace cohn::simd::avx2
