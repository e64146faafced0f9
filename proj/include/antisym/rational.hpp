#pragma once

// Exact rational scalars backed by GMP.
//
// mpq_class keeps results of arithmetic canonical (lowest terms, positive
// denominator). Values built from a raw numerator/denominator pair must go
// through make_rational so the same holds for them.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace antisym {

using Integer = mpz_class;
using Rational = mpq_class;

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class degenerate_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_canonical(const Rational& r) {
  if (sgn(r.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(num, den);  // already in lowest terms
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline std::string to_string(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

namespace detail {

// log2 of a positive big integer without overflow.
inline double log2_integer(const Integer& z) {
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

}  // namespace detail

// log2 of a positive rational, accurate to double precision even when the
// numerator and denominator individually overflow a double.
inline double log2(const Rational& r) {
  if (sgn(r) <= 0) throw domain_error("log2 of a non-positive rational");
  return detail::log2_integer(r.get_num()) - detail::log2_integer(r.get_den());
}

// Fixed-point decimal rendering with `digits` fractional digits, truncated
// toward zero. Exact: no floating point involved.
inline std::string to_decimal(const Rational& r, int digits = 12) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = abs(r.get_num()) * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return sgn(r) < 0 ? "-" + out : out;
}

}  // namespace antisym
