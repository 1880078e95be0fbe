#include "levelbound/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace levelbound {

namespace {

unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

unsigned precision_of(const Real& v) {
  return static_cast<unsigned>(mpfr_get_prec(v.backend().data()));
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : previous_digits_(Real::default_precision()), requested_(bits) {
  unsigned digits = digits_for_bits(bits);
  Real::default_precision(digits);
  Real probe = 1;
  // digits10 -> bits conversion inside MPFR backend may round down slightly
  while (precision_of(probe) < bits) {
    Real::default_precision(++digits);
    probe = Real(1);
  }
  effective_ = precision_of(probe);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_digits_); }

unsigned precision_bits_from_env(unsigned fallback) {
  const char* raw = std::getenv("LEVELBOUND_PRECISION_BITS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 16 || v > 1U << 20) return fallback;
  return static_cast<unsigned>(v);
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

Real log_of(const Real& v) {
  if (v == 0) return Real(-std::numeric_limits<double>::infinity());
  return Real(log(v));
}

std::string to_decimal(const Real& v, int digits) {
  if (boost::multiprecision::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (boost::multiprecision::isnan(v)) return "nan";
  int d = digits > 0 ? digits : static_cast<int>(digits_for_bits(precision_of(v)));
  return v.str(d, std::ios_base::scientific);
}

std::string to_decimal(const Rational& v, int digits) { return to_decimal(Real(v), digits); }

std::string to_fraction(const Rational& v) { return v.str(); }

}  // namespace levelbound
