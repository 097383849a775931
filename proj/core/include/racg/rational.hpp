#pragma once

#include <gmpxx.h>

#include <string>

namespace racg {

// Exact arithmetic everywhere: invariants in this library are rational
// numbers whose denominators are (small) powers of two, but intermediate
// elimination steps can blow up well past 64 bits.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rendering: "p/q" with q > 0 and gcd(p,q) = 1, plain "p" for
// integers (mpq_class prints exactly this once canonicalized).
inline std::string to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// (-1/2)^k for k >= 0.
inline Rat minus_half_pow(int k) {
  Rat q(((k % 2) == 0) ? 1 : -1, Int(1) << k);
  q.canonicalize();
  return q;
}

// Largest power of two dividing d == d itself, i.e. tests d | 2^e.
inline bool denominator_divides_pow2(const Rat& q, int e) {
  Rat c = q;
  c.canonicalize();
  Int d = c.get_den();
  Int bound = Int(1) << e;
  return mpz_divisible_p(bound.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace racg
