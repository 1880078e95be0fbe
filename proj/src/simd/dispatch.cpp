#include "levelbound/simd/wht.hpp"

#include <atomic>

namespace levelbound::simd {

namespace {

// -1: automatic, otherwise a forced Isa value
std::atomic<int> g_forced{-1};

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool available = __builtin_cpu_supports("avx2");
  return available;
#else
  return false;
#endif
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced == static_cast<int>(Isa::scalar)) return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void wht_mod(std::uint32_t* data, unsigned log_size, std::uint32_t p) {
  if (active_isa() == Isa::avx2) {
    wht_mod_avx2(data, log_size, p);
  } else {
    wht_mod_scalar(data, log_size, p);
  }
}

}  // namespace levelbound::simd
