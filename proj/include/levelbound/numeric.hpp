#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <type_traits>

namespace levelbound {

/// Working real type. Precision is whatever was active when a value was
/// created; see PrecisionScope.
using Real = boost::multiprecision::mpfr_float;
/// Exact mode for small-n oracle checks.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// RAII guard for the default precision of newly constructed Real values.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned requested_bits() const { return requested_; }
  /// MPFR rounds the decimal-digit request up; this is the mantissa size
  /// actually in effect.
  unsigned effective_bits() const { return effective_; }

 private:
  unsigned previous_digits_;
  unsigned requested_;
  unsigned effective_;
};

/// Reads LEVELBOUND_PRECISION_BITS, falling back when unset or malformed.
unsigned precision_bits_from_env(unsigned fallback = kDefaultPrecisionBits);

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
T make_ratio(long long num, long long den) {
  if constexpr (is_exact_v<T>) {
    return Rational(num, den);
  } else {
    T r = num;
    r /= den;
    return r;
  }
}

BigInt binomial(unsigned n, unsigned k);

template <class T>
T to_scalar(const BigInt& v) {
  if constexpr (is_exact_v<T>) {
    return Rational(v);
  } else {
    return T(v);
  }
}

/// Square-and-multiply; works for both scalar types.
template <class T>
T power(const T& base, unsigned e) {
  T result = 1;
  T b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

inline Real to_real(const Real& v) { return v; }
inline Real to_real(const Rational& v) { return Real(v); }

inline double to_double(const Real& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return Real(v).convert_to<double>(); }

/// Natural log; -inf for zero.
Real log_of(const Real& v);
inline Real log_of(const Rational& v) { return log_of(Real(v)); }

/// Decimal rendering with `digits` significant digits (0: full precision).
std::string to_decimal(const Real& v, int digits = 0);
std::string to_decimal(const Rational& v, int digits = 0);
std::string to_fraction(const Rational& v);

/// Clamp into [0,1]; returns true when the value was moved.
template <class T>
bool clamp_unit(T& v) {
  if (v < 0) {
    v = 0;
    return true;
  }
  if (v > 1) {
    v = 1;
    return true;
  }
  return false;
}

/// |a-b| / max(|a|,|b|), 0 when both vanish.
template <class T>
Real relative_gap(const T& a, const T& b) {
  Real ra = to_real(a);
  Real rb = to_real(b);
  Real scale = boost::multiprecision::max(abs(ra), abs(rb));
  if (scale == 0) return Real(0);
  Real diff = abs(ra - rb);
  return Real(diff / scale);
}

/// a <= b up to a relative slack on max(|a|,|b|).
template <class T>
bool le_with_slack(const T& a, const T& b, double rel_slack) {
  if (a <= b) return true;
  return relative_gap(a, b) <= rel_slack;
}

}  // namespace levelbound
