#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include <Eigen/Core>

namespace abelarr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a computation would exceed the desk-scale limits.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a theorem's hypotheses are not met by the input.
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scalar helpers. The linear algebra is templated on the scalar type; these
// overloads cover the two scalars in use (GMP integers and int64).

inline Integer abs_value(const Integer& a) { return abs(a); }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }

inline int sign_of(const Integer& a) { return sgn(a); }
inline int sign_of(std::int64_t a) { return (a > 0) - (a < 0); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division and the matching nonnegative-remainder modulus (b > 0 for mod).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

inline Integer power(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool fits_int64(const Integer& a) { return a.fits_slong_p() != 0; }

inline std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) throw std::overflow_error("integer does not fit in 64 bits: " + a.get_str());
  return a.get_si();
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

/// Reduces a rational into [0, 1).
inline Rational mod_one(const Rational& x) {
  Integer num = floor_mod(x.get_num(), x.get_den());
  Rational r(num, x.get_den());
  r.canonicalize();
  return r;
}

}  // namespace abelarr

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
