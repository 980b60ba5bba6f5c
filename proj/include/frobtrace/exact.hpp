#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>

#include "frobtrace/errors.hpp"

namespace frobtrace {

// Exact arithmetic used by the trace-formula side of the library.  Traces of
// Hecke operators overflow 64 bits already at weight 22 for p near 500, so
// everything downstream of point counts is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the convention C(n,k) = 0 for k < 0 or k > n.
// The out-of-range cases do occur: the recursion coefficients b_i use
// C(2m, m-i-1) which hits k = -1 at i = m.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp > 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline Int as_integer(const Rat& r, const char* what) {
  if (!is_integer(r)) raise(ErrorCode::internal_error, std::string(what) + " is not an integer");
  return boost::multiprecision::numerator(r);
}

inline std::int64_t isqrt_floor(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace frobtrace
