#include "levelbound/simd/wht.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define LEVELBOUND_HAVE_X86 1
#endif

namespace levelbound::simd {

#ifdef LEVELBOUND_HAVE_X86

namespace {

// Lanes hold values below p < 2^31, so a + b and a + p - b fit in 32 bits;
// min(x, x - p) (unsigned, x - p wraps when x < p) reduces into [0, p).
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256i pv) {
  return _mm256_min_epu32(x, _mm256_sub_epi32(x, pv));
}

}  // namespace

__attribute__((target("avx2"))) void wht_mod_avx2(std::uint32_t* data, unsigned log_size,
                                                  std::uint32_t p) {
  const std::size_t size = std::size_t{1} << log_size;
  // spans below one vector width stay scalar
  std::size_t h = 1;
  for (; h < size && h < 8; h <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * h) {
      for (std::size_t i = base; i < base + h; ++i) {
        const std::uint32_t a = data[i];
        const std::uint32_t b = data[i + h];
        const std::uint32_t s = a + b;
        const std::uint32_t d = a + p - b;
        data[i] = s >= p ? s - p : s;
        data[i + h] = d >= p ? d - p : d;
      }
    }
  }
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  for (; h < size; h <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * h) {
      for (std::size_t i = base; i < base + h; i += 8) {
        auto* lo = reinterpret_cast<__m256i*>(data + i);
        auto* hi = reinterpret_cast<__m256i*>(data + i + h);
        const __m256i a = _mm256_loadu_si256(lo);
        const __m256i b = _mm256_loadu_si256(hi);
        const __m256i s = _mm256_add_epi32(a, b);
        const __m256i d = _mm256_sub_epi32(_mm256_add_epi32(a, pv), b);
        _mm256_storeu_si256(lo, reduce(s, pv));
        _mm256_storeu_si256(hi, reduce(d, pv));
      }
    }
  }
}

#else

void wht_mod_avx2(std::uint32_t* data, unsigned log_size, std::uint32_t p) {
  wht_mod_scalar(data, log_size, p);
}

#endif

}  // namespace levelbound::simd
