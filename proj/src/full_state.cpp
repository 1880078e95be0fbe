#include "levelbound/errors.hpp"
#include "levelbound/oracle.hpp"
#include "levelbound/partition.hpp"
#include "levelbound/simd/wht.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace levelbound {

namespace {

using u128 = unsigned __int128;

// Three primes below 2^31 whose product (~9.9e27) exceeds n^n for n <= 20,
// so every count below is recovered exactly by CRT.
constexpr std::array<std::uint32_t, 3> kPrimes = {2147483647u, 2147483629u, 2147483587u};

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

// Garner reconstruction of x mod p0*p1*p2 from its residues.
u128 crt(const std::array<std::uint32_t, 3>& r) {
  const std::uint64_t p0 = kPrimes[0], p1 = kPrimes[1], p2 = kPrimes[2];
  static const std::uint32_t inv_p0_mod_p1 = inv_mod(static_cast<std::uint32_t>(p0 % p1), kPrimes[1]);
  static const std::uint32_t inv_p0p1_mod_p2 =
      inv_mod(static_cast<std::uint32_t>((p0 % p2) * (p1 % p2) % p2), kPrimes[2]);
  const std::uint64_t x0 = r[0];
  const std::uint64_t t1 = (r[1] + p1 - x0 % p1) % p1 * inv_p0_mod_p1 % p1;
  const std::uint64_t x01_mod_p2 = (x0 + p0 % p2 * t1) % p2;
  const std::uint64_t t2 = (r[2] + p2 - x01_mod_p2) % p2 * inv_p0p1_mod_p2 % p2;
  return static_cast<u128>(x0) + static_cast<u128>(p0) * t1 + static_cast<u128>(p0 * p1) * t2;
}

template <class T>
T from_u128(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  BigInt b = hi;
  b <<= 64;
  b += lo;
  return to_scalar<T>(b);
}

}  // namespace

template <class T>
OracleResult<T> exact_full_hitting(const ProblemSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int guard = is_exact_v<T> ? kFullStateMaxNExact : kFullStateMaxN;
  if (n > guard) {
    throw GuardError("full-state enumeration refused: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(guard) + (is_exact_v<T> ? " in exact mode" : ""));
  }
  const LevelPartition partition = build_partition(spec);
  const std::size_t K = partition.K();
  const std::size_t size = std::size_t{1} << n;
  const auto log_size = static_cast<unsigned>(n);

  std::vector<std::uint8_t> level(size);
  for (std::size_t x = 0; x < size; ++x) {
    level[x] = static_cast<std::uint8_t>(partition.level_of_weight(std::popcount(x)));
  }

  // Mutation x -> y has probability (n-1)^(n-d) / n^n with d = |x xor y|;
  // the numerator is the XOR-convolution kernel g.
  std::array<std::vector<std::uint32_t>, 3> g_hat;
  std::array<std::uint32_t, 3> inv_size{};
  for (std::size_t pi = 0; pi < 3; ++pi) {
    const std::uint32_t p = kPrimes[pi];
    std::vector<std::uint32_t> pw(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) pw[static_cast<std::size_t>(d)] = pow_mod(static_cast<std::uint32_t>(n - 1), static_cast<std::uint64_t>(n - d), p);
    g_hat[pi].resize(size);
    for (std::size_t z = 0; z < size; ++z) g_hat[pi][z] = pw[static_cast<std::size_t>(std::popcount(z))];
    simd::wht_mod(g_hat[pi].data(), log_size, p);
    inv_size[pi] = inv_mod(pow_mod(2, static_cast<std::uint64_t>(n), p), p);
  }

  const T total = to_scalar<T>(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n)));
  std::vector<u128> escape(size, 0);
  std::vector<bool> dead(size, false);  // can move into an unreachable level
  std::vector<T> weighted(size, T(0));  // sum over higher levels of count * m
  std::vector<u128> obs_min((K + 1) * (K + 1), ~u128{0}), obs_max((K + 1) * (K + 1), 0);

  OracleResult<T> out;
  out.mode = OracleMode::full_state;
  out.m.assign(K + 1, T(0));
  out.reachable.assign(K + 1, true);
  Real deviation = 0;

  auto finalize = [&](std::size_t L) {
    if (L == 0) return;
    bool first = true;
    T lo = 0, hi = 0, sum = 0;
    std::size_t count = 0;
    for (std::size_t x = 0; x < size; ++x) {
      if (level[x] != L) continue;
      if (escape[x] == 0 || dead[x]) {
        out.reachable[L] = false;
        continue;
      }
      T cand = (total + weighted[x]) / from_u128<T>(escape[x]);
      if (first || cand < lo) lo = cand;
      if (first || cand > hi) hi = cand;
      first = false;
      sum += cand;
      ++count;
    }
    if (!out.reachable[L] || count == 0) {
      out.reachable[L] = false;
      return;
    }
    out.m[L] = sum / static_cast<long long>(count);
    Real spread = relative_gap(lo, hi);
    if (spread > deviation) deviation = spread;
  };

  std::array<std::vector<std::uint32_t>, 3> work;
  for (auto& w : work) w.resize(size);
  std::vector<std::array<std::uint32_t, 3>> residues(size);
  for (std::size_t L = 0; L < K; ++L) {
    finalize(L);
    for (std::size_t pi = 0; pi < 3; ++pi) {
      const std::uint32_t p = kPrimes[pi];
      auto& w = work[pi];
      for (std::size_t x = 0; x < size; ++x) w[x] = level[x] == L ? 1 : 0;
      simd::wht_mod(w.data(), log_size, p);
      for (std::size_t x = 0; x < size; ++x) w[x] = mul_mod(w[x], g_hat[pi][x], p);
      simd::wht_mod(w.data(), log_size, p);
      for (std::size_t x = 0; x < size; ++x) residues[x][pi] = mul_mod(w[x], inv_size[pi], p);
    }
    const bool propagate = L == 0 || out.reachable[L];
    for (std::size_t x = 0; x < size; ++x) {
      const std::size_t k = level[x];
      if (k <= L) continue;
      const u128 c = crt(residues[x]);
      const std::size_t idx = k * (K + 1) + L;
      if (c < obs_min[idx]) obs_min[idx] = c;
      if (c > obs_max[idx]) obs_max[idx] = c;
      if (c == 0) continue;
      escape[x] += c;
      if (!propagate) {
        dead[x] = true;
        continue;
      }
      if (L != 0) weighted[x] += from_u128<T>(c) * out.m[L];
    }
  }
  finalize(K);

  // Observed kernel, stay probability from the complement of all escapes.
  TriangularTable<T> pmin(K + 1), pmax(K + 1);
  pmin[0].assign(1, T(1));
  pmax[0].assign(1, T(1));
  for (std::size_t k = 1; k <= K; ++k) {
    pmin[k].assign(k + 1, T(0));
    pmax[k].assign(k + 1, T(0));
    for (std::size_t L = 0; L < k; ++L) {
      const std::size_t idx = k * (K + 1) + L;
      pmin[k][L] = from_u128<T>(obs_min[idx]) / total;
      pmax[k][L] = from_u128<T>(obs_max[idx]) / total;
    }
    bool first = true;
    u128 esc_lo = 0, esc_hi = 0;
    for (std::size_t x = 0; x < size; ++x) {
      if (level[x] != k) continue;
      if (first || escape[x] < esc_lo) esc_lo = escape[x];
      if (first || escape[x] > esc_hi) esc_hi = escape[x];
      first = false;
    }
    pmin[k][k] = T(1) - from_u128<T>(esc_hi) / total;
    pmax[k][k] = T(1) - from_u128<T>(esc_lo) / total;
  }
  out.observed_p_min = std::move(pmin);
  out.observed_p_max = std::move(pmax);
  out.lumpability_deviation = deviation;
  return out;
}

template OracleResult<Real> exact_full_hitting<Real>(const ProblemSpec&);
template OracleResult<Rational> exact_full_hitting<Rational>(const ProblemSpec&);

}  // namespace levelbound
