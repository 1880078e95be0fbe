#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace levelbound::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// In-place unnormalized Walsh-Hadamard transform modulo an odd prime
/// p < 2^31 over 2^log_size entries, each already reduced below p.
void wht_mod_scalar(std::uint32_t* data, unsigned log_size, std::uint32_t p);

/// Same result as wht_mod_scalar, bit for bit. Callers must check
/// avx2_available() first; use wht_mod for automatic selection.
void wht_mod_avx2(std::uint32_t* data, unsigned log_size, std::uint32_t p);

bool avx2_available();

/// Variant wht_mod will run: the forced one if set, else the best the CPU
/// supports.
Isa active_isa();

/// Pin the variant (tests use this to compare both paths); nullopt restores
/// automatic selection. Forcing avx2 on a CPU without it is ignored.
void force_isa(std::optional<Isa> isa);

void wht_mod(std::uint32_t* data, unsigned log_size, std::uint32_t p);

}  // namespace levelbound::simd
