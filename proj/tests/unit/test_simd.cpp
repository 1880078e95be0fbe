#include "levelbound/simd/wht.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

using namespace levelbound::simd;

namespace {

constexpr std::uint32_t kPrimes[] = {2147483647u, 2147483629u, 2147483587u};

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> random_vector(std::size_t size, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(size);
  for (auto& x : v) x = dist(rng);
  return v;
}

struct IsaReset {
  ~IsaReset() { force_isa(std::nullopt); }
};

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("moduli are prime") {
  for (std::uint32_t p : kPrimes) CHECK(is_prime(p));
}

TEST_CASE("scalar and AVX2 transforms are bitwise identical") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; only the scalar path is exercised");
    return;
  }
  for (std::uint32_t p : kPrimes) {
    for (unsigned log_size = 0; log_size <= 14; ++log_size) {
      auto a = random_vector(std::size_t{1} << log_size, p, 1000 + log_size);
      auto b = a;
      wht_mod_scalar(a.data(), log_size, p);
      wht_mod_avx2(b.data(), log_size, p);
      CHECK(a == b);
    }
    // extreme residues exercise the conditional subtraction
    std::vector<std::uint32_t> hi(256, p - 1), hi2 = hi;
    wht_mod_scalar(hi.data(), 8, p);
    wht_mod_avx2(hi2.data(), 8, p);
    CHECK(hi == hi2);
  }
}

TEST_CASE("transform applied twice scales by the size") {
  const std::uint32_t p = kPrimes[0];
  for (unsigned log_size : {1u, 5u, 10u}) {
    const std::size_t size = std::size_t{1} << log_size;
    const auto orig = random_vector(size, p, log_size);
    auto v = orig;
    wht_mod(v.data(), log_size, p);
    wht_mod(v.data(), log_size, p);
    for (std::size_t i = 0; i < size; ++i) {
      CHECK(v[i] == static_cast<std::uint64_t>(orig[i]) * size % p);
    }
  }
}

TEST_CASE("XOR convolution via the transform matches brute force") {
  const std::uint32_t p = kPrimes[1];
  const unsigned log_size = 6;
  const std::size_t size = std::size_t{1} << log_size;
  const auto a = random_vector(size, 1000, 7);
  const auto b = random_vector(size, 1000, 8);
  std::vector<std::uint64_t> direct(size, 0);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) direct[x ^ y] += static_cast<std::uint64_t>(a[x]) * b[y];
  }
  auto fa = a, fb = b;
  wht_mod(fa.data(), log_size, p);
  wht_mod(fb.data(), log_size, p);
  for (std::size_t i = 0; i < size; ++i) fa[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(fa[i]) * fb[i] % p);
  wht_mod(fa.data(), log_size, p);
  // divide by size: multiply by its inverse
  std::uint64_t inv = 1, base = size % p;
  for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  for (std::size_t i = 0; i < size; ++i) CHECK(fa[i] * inv % p == direct[i] % p);
}

TEST_CASE("dispatch can be forced") {
  IsaReset reset;
  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  if (avx2_available()) {
    force_isa(Isa::avx2);
    CHECK(active_isa() == Isa::avx2);
  }
  force_isa(std::nullopt);
  CHECK(active_isa() == (avx2_available() ? Isa::avx2 : Isa::scalar));
  CHECK(to_string(Isa::scalar) == "scalar");
  CHECK(to_string(Isa::avx2) == "avx2");
}

}  // TEST_SUITE
