#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "frobtrace/exact.hpp"

namespace frobtrace {

// Reduced primitive binary quadratic form a x^2 + b xy + c y^2 of negative
// discriminant: b^2 - 4ac = d, |b| <= a <= c, b >= 0 when |b| = a or a = c,
// gcd(a,b,c) = 1.
struct ReducedForm {
  std::int64_t a = 0, b = 0, c = 0;
};

struct OrderClassData {
  std::int64_t d = 0;   // discriminant
  std::int64_t h = 0;   // class number
  int w = 1;            // half the unit-group size: 3 at d=-3, 2 at d=-4, else 1
  Rat h_star;           // h/w as an exact rational
  std::vector<ReducedForm> forms;
};

inline bool is_discriminant(std::int64_t d) {
  if (d >= 0) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  return r == 0 || r == 1;
}

// h(d) by direct enumeration of reduced primitive forms, a <= sqrt(|d|/3).
// Memoized: the Hijikata sweep asks for the same small discriminants over and
// over.  Write-once per discriminant, guarded for concurrent access.
inline OrderClassData class_number(std::int64_t d) {
  if (!is_discriminant(d)) raise(ErrorCode::bad_discriminant, "need d < 0 and d = 0,1 mod 4");

  static std::mutex mu;
  static std::map<std::int64_t, OrderClassData> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }

  OrderClassData data;
  data.d = d;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      data.forms.push_back({a, b, c});
    }
  }
  data.h = static_cast<std::int64_t>(data.forms.size());
  data.w = (d == -3) ? 3 : (d == -4) ? 2 : 1;
  data.h_star = Rat(data.h, data.w);

  std::lock_guard lock(mu);
  return cache.emplace(d, std::move(data)).first->second;
}

// Conductor of the order O(d): largest f with f^2 | d and d/f^2 a discriminant.
inline std::int64_t conductor(std::int64_t d) {
  if (!is_discriminant(d)) raise(ErrorCode::bad_discriminant, "need d < 0 and d = 0,1 mod 4");
  std::int64_t best = 1;
  for (std::int64_t f = 1; f * f <= -d; ++f)
    if (d % (f * f) == 0 && is_discriminant(d / (f * f))) best = f;
  return best;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds;
  for (std::int64_t f = 1; f <= n; ++f)
    if (n % f == 0) ds.push_back(f);
  return ds;
}

// H(d) = sum of h over all orders between O(d) and the maximal order, i.e.
// sum over divisors of the conductor.
inline Int hurwitz_H(std::int64_t d) {
  Int total = 0;
  for (std::int64_t f : divisors(conductor(d))) total += class_number(d / (f * f)).h;
  return total;
}

// Classification of s^2 - 4p by positive ell and squarefree m:
//   s^2 - 4p = ell^2 m      with m = 1 mod 4, or
//   s^2 - 4p = 4 ell^2 m    with m = 2,3 mod 4.
struct HurwitzSplit {
  std::int64_t s = 0, p = 0;
  std::int64_t D = 0;    // s^2 - 4p
  std::int64_t ell = 0;  // the positive integer l
  std::int64_t m = 0;    // negative squarefree part
};

inline HurwitzSplit split_discriminant(std::int64_t s, std::int64_t p) {
  if (s <= 0 || s * s >= 4 * p) raise(ErrorCode::out_of_range, "need 0 < s < 2 sqrt(p)");
  HurwitzSplit out;
  out.s = s;
  out.p = p;
  out.D = s * s - 4 * p;
  std::int64_t A = -out.D, ell = 1;
  for (std::int64_t f = 2; f * f <= A; ++f)
    while (A % (f * f) == 0) {
      A /= f * f;
      ell *= f;
    }
  out.m = -A;  // squarefree
  if (((out.m % 4) + 4) % 4 == 1) {
    out.ell = ell;
  } else {
    // D = 0,1 mod 4 forces ell even here
    if (ell % 2 != 0) raise(ErrorCode::internal_error, "squarefree split inconsistent");
    out.ell = ell / 2;
  }
  return out;
}

// sum_{f | ell} h*((s^2-4p)/f^2), the inner sum of the Hijikata formula.
inline Rat hstar_divisor_sum(std::int64_t s, std::int64_t p) {
  const HurwitzSplit sp = split_discriminant(s, p);
  Rat total = 0;
  for (std::int64_t f : divisors(sp.ell)) total += class_number(sp.D / (f * f)).h_star;
  return total;
}

inline Int h_divisor_sum(std::int64_t s, std::int64_t p) {
  const HurwitzSplit sp = split_discriminant(s, p);
  Int total = 0;
  for (std::int64_t f : divisors(sp.ell)) total += class_number(sp.D / (f * f)).h;
  return total;
}

}  // namespace frobtrace
