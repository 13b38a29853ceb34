#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace secant {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction. GMP keeps every arithmetic result in lowest terms with a
/// positive denominator; values built from a numerator/denominator pair must
/// go through make_rational().
using Rational = mpq_class;

/// Raised when an operation's mathematical precondition fails.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest integer <= q.
inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Smallest integer >= q.
inline Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// "p/q", or bare "p" for integers. Never a decimal.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool fits_int64(const Integer& z) {
  return z.fits_slong_p() && sizeof(long) == sizeof(std::int64_t);
}

inline std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw DomainError("integer does not fit in 64 bits");
  return z.get_si();
}

}  // namespace secant
