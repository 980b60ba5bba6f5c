#pragma once

#include <cstdint>
#include <vector>

#include "frobtrace/errors.hpp"
#include "frobtrace/exact.hpp"

namespace frobtrace {

// p = a^2 + b^2 with a + bi = 1 mod (2+2i) in Z[i].
struct GaussianDecomp {
  std::int64_t a = 0, b = 0;
};

// p = c^2 - cd + d^2 with c + d*omega = 2 mod 3 in Z[omega].
struct EisensteinDecomp {
  std::int64_t c = 0, d = 0;
};

// (a-1) + bi divisible by 2+2i: multiply by the conjugate 2-2i and test the
// result for divisibility by the norm 8; componentwise that is 4 | (a-1+b)
// and 4 | (b-a+1).  Exact integer test, no rational arithmetic.
inline bool gaussian_normalized(std::int64_t a, std::int64_t b) {
  return (a - 1 + b) % 4 == 0 && (b - a + 1) % 4 == 0;
}

// c + d*omega = 2 mod 3 reduces componentwise over the Z-basis {1, omega}.
inline bool eisenstein_normalized(std::int64_t c, std::int64_t d) {
  return ((c % 3) + 3) % 3 == 2 && d % 3 == 0;
}

inline GaussianDecomp gaussian_decomp(std::int64_t p) {
  if (p % 4 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 4");
  std::int64_t a0 = -1, b0 = -1;
  for (std::int64_t a = 0; a * a <= p; ++a) {
    const std::int64_t b = isqrt_floor(p - a * a);
    if (b * b == p - a * a) {
      a0 = a;
      b0 = b;
      break;
    }
  }
  if (a0 < 0) raise(ErrorCode::internal_error, "no two-square decomposition found");
  // fixed scan order over the eight associates/conjugates of the base solution:
  // z, conj z, then unit multiples i, -1, -i of each
  const std::int64_t za = a0, zb = b0;
  const std::int64_t cand[8][2] = {
      {za, zb},  {za, -zb},   // z, conj z
      {-zb, za}, {zb, za},    // i z, i conj z
      {-za, -zb}, {-za, zb},  // -z, -conj z
      {zb, -za}, {-zb, -za},  // -i z, -i conj z
  };
  for (const auto& c : cand)
    if (gaussian_normalized(c[0], c[1])) return {c[0], c[1]};
  raise(ErrorCode::internal_error, "no associate satisfies the Z[i] congruence");
}

inline EisensteinDecomp eisenstein_decomp(std::int64_t p) {
  if (p % 3 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 3");
  std::int64_t c0 = 0, d0 = 0;
  bool found = false;
  const std::int64_t bound = isqrt_floor(4 * p);
  for (std::int64_t c = 0; c <= bound && !found; ++c)
    for (std::int64_t d = 0; d <= bound; ++d)
      if (c * c - c * d + d * d == p) {
        c0 = c;
        d0 = d;
        found = true;
        break;
      }
  if (!found) raise(ErrorCode::internal_error, "no Eisenstein-norm decomposition found");
  // multiplication by omega is (c,d) -> (-d, c-d); conjugation is (c,d) -> (c-d, -d)
  const auto rot = [](std::int64_t c, std::int64_t d) { return std::pair{-d, c - d}; };
  const auto conj = [](std::int64_t c, std::int64_t d) { return std::pair{c - d, -d}; };
  std::vector<std::pair<std::int64_t, std::int64_t>> cand;
  std::pair<std::int64_t, std::int64_t> w{c0, d0};
  for (int j = 0; j < 3; ++j) {
    cand.push_back(w);
    cand.push_back(conj(w.first, w.second));
    w = rot(w.first, w.second);
  }
  const std::size_t six = cand.size();
  for (std::size_t i = 0; i < six; ++i) cand.emplace_back(-cand[i].first, -cand[i].second);
  for (const auto& [c, d] : cand)
    if (eisenstein_normalized(c, d)) return {c, d};
  raise(ErrorCode::internal_error, "no unit multiple satisfies the Z[omega] congruence");
}

// All normalized solutions, by full scan.  Used by the property tests that
// assert the downstream lambda values do not depend on the associate chosen.
inline std::vector<GaussianDecomp> all_gaussian_decomps(std::int64_t p) {
  std::vector<GaussianDecomp> out;
  const std::int64_t bound = isqrt_floor(p);
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      if (a * a + b * b == p && gaussian_normalized(a, b)) out.push_back({a, b});
  return out;
}

inline std::vector<EisensteinDecomp> all_eisenstein_decomps(std::int64_t p) {
  std::vector<EisensteinDecomp> out;
  const std::int64_t bound = isqrt_floor(4 * p);
  for (std::int64_t c = -bound; c <= bound; ++c)
    for (std::int64_t d = -bound; d <= bound; ++d)
      if (c * c - c * d + d * d == p && eisenstein_normalized(c, d)) out.push_back({c, d});
  return out;
}

}  // namespace frobtrace
