#include "levelbound/simd/wht.hpp"

namespace levelbound::simd {

void wht_mod_scalar(std::uint32_t* data, unsigned log_size, std::uint32_t p) {
  const std::size_t size = std::size_t{1} << log_size;
  for (std::size_t h = 1; h < size; h <<= 1) {
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
}

}  // namespace levelbound::simd
