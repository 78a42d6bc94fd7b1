// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace picseq::exactla::kernels::detail {
namespace {

// Barrett reduction for x < 2^14 with m = ceil(2^16 / p). The quotient
// estimate is exact or one too large, so a single conditional add of p
// restores the canonical residue. Every product fits in a signed 32-bit lane
// because p <= 97 keeps x * m below 2^31.
inline __m256i reduce_small(__m256i x, __m256i m, __m256i vp) {
  __m256i q = _mm256_srli_epi32(_mm256_mullo_epi32(x, m), 16);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  return _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
}

inline Residue barrett_factor(int p) { return static_cast<Residue>((65536 + p - 1) / p); }

void axpy_avx2(Residue* dst, const Residue* src, std::size_t n, Residue c, int p) {
  if (c == 0) return;
  const __m256i vc = _mm256_set1_epi32(c);
  const __m256i vp = _mm256_set1_epi32(p);
  const __m256i vm = _mm256_set1_epi32(barrett_factor(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(vc, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_small(x, vm, vp));
  }
  for (; i < n; ++i) {
    dst[i] = (dst[i] + c * src[i]) % p;
  }
}

void scale_avx2(Residue* dst, std::size_t n, Residue c, int p) {
  const __m256i vc = _mm256_set1_epi32(c);
  const __m256i vp = _mm256_set1_epi32(p);
  const __m256i vm = _mm256_set1_epi32(barrett_factor(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i x = _mm256_mullo_epi32(vc, d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_small(x, vm, vp));
  }
  for (; i < n; ++i) {
    dst[i] = (c * dst[i]) % p;
  }
}

constexpr KernelTable kAvx2{"avx2", &axpy_avx2, &scale_avx2};

}  // namespace

const KernelTable& avx2_impl() noexcept { return kAvx2; }

}  // namespace picseq::exactla::kernels::detail
