#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <vector>

#include "frobtrace/errors.hpp"

namespace frobtrace {

using Complex = std::complex<double>;

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Hard cap on the prime used for table construction (dlog + root-of-unity
// tables are O(p) complex doubles each).  Overridable via FROBTRACE_PMAX_HARD.
inline std::uint32_t default_pmax_hard() {
  if (const char* env = std::getenv("FROBTRACE_PMAX_HARD")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::uint32_t>(v);
  }
  return 1000000u;
}

// Arithmetic context for F_p.  T, the fixed generator of the character group,
// is realized as x -> e^{2 pi i dlog(x) / (p-1)} where dlog is taken to the
// smallest primitive root g.  Immutable after construction.
struct FpContext {
  std::uint32_t p = 0;  // prime modulus
  std::uint32_t g = 0;  // smallest primitive root mod p
  std::vector<std::uint32_t> dlog;  // dlog[x] = m with g^m = x, for x in 1..p-1
  std::vector<Complex> unit_roots;  // unit_roots[k] = e^{2 pi i k/(p-1)}
  std::vector<std::int8_t> quad;    // quadratic character values: +1, -1, or 0 at x=0

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  std::uint32_t reduce_exp(std::int64_t m) const {
    std::int64_t n = p - 1;
    std::int64_t r = m % n;
    return static_cast<std::uint32_t>(r < 0 ? r + n : r);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }

  std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e) const {
    std::uint64_t r = 1, b = base % p;
    while (e > 0) {
      if (e & 1u) r = r * b % p;
      b = b * b % p;
      e >>= 1u;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t inv(std::uint32_t x) const {
    if (x % p == 0) raise(ErrorCode::bad_argument, "inverse of 0 mod p");
    return pow_mod(x, p - 2);
  }

  // Legendre symbol via dlog parity.
  int legendre(std::int64_t x) const { return quad[reduce(x)]; }

  const Complex& unit_root(std::uint64_t k) const { return unit_roots[k % (p - 1)]; }
};

inline FpContext make_context(std::uint32_t p, std::uint32_t pmax = default_pmax_hard()) {
  if (!is_prime_u64(p)) raise(ErrorCode::non_prime, std::to_string(p) + " is not prime");
  if (p < 5) raise(ErrorCode::bad_argument, "p must be at least 5");
  if (p > pmax) raise(ErrorCode::too_large, "p exceeds table bound " + std::to_string(pmax));

  FpContext ctx;
  ctx.p = p;

  // distinct prime factors of p-1, for the primitive-root order test
  std::vector<std::uint32_t> factors;
  {
    std::uint32_t n = p - 1;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
      if (n % d == 0) {
        factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) factors.push_back(n);
  }
  for (std::uint32_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint32_t q : factors) {
      if (ctx.pow_mod(g, (p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.g = g;
      break;
    }
  }

  ctx.dlog.assign(p, 0);
  ctx.quad.assign(p, 0);
  std::uint32_t x = 1;
  for (std::uint32_t m = 0; m < p - 1; ++m) {
    ctx.dlog[x] = m;
    ctx.quad[x] = (m % 2 == 0) ? 1 : -1;
    x = ctx.mul(x, ctx.g);
  }

  ctx.unit_roots.resize(p - 1);
  for (std::uint32_t k = 0; k < p - 1; ++k)
    ctx.unit_roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / (p - 1));
  return ctx;
}

// chi = T^m on F_p^x, extended by chi(0) = 0.
class MultCharacter {
 public:
  MultCharacter(const FpContext& ctx, std::int64_t m) : ctx_(&ctx), m_(ctx.reduce_exp(m)) {}

  const FpContext& context() const { return *ctx_; }
  std::uint32_t exponent() const { return m_; }
  bool is_trivial() const { return m_ == 0; }

  std::uint64_t order() const {
    std::uint64_t n = ctx_->p - 1;
    return n / std::gcd<std::uint64_t>(m_, n);
  }

  Complex operator()(std::int64_t x) const {
    std::uint32_t xr = ctx_->reduce(x);
    if (xr == 0) return {0.0, 0.0};
    return ctx_->unit_roots[static_cast<std::uint64_t>(m_) * ctx_->dlog[xr] % (ctx_->p - 1)];
  }

  MultCharacter pow(std::int64_t k) const { return {*ctx_, static_cast<std::int64_t>(m_) * k}; }
  MultCharacter inverse() const { return {*ctx_, -static_cast<std::int64_t>(m_)}; }

  friend MultCharacter operator*(const MultCharacter& a, const MultCharacter& b) {
    return {*a.ctx_, static_cast<std::int64_t>(a.m_) + b.m_};
  }

 private:
  const FpContext* ctx_;
  std::uint32_t m_;
};

inline MultCharacter character(const FpContext& ctx, std::int64_t m) { return {ctx, m}; }
inline MultCharacter trivial_char(const FpContext& ctx) { return {ctx, 0}; }
inline MultCharacter quadratic_char(const FpContext& ctx) { return {ctx, (ctx.p - 1) / 2}; }

// xi = T^{(p-1)/12}, the canonical order-12 character used by the trace
// identity on the j = 1728/t family.
inline MultCharacter order12_char(const FpContext& ctx) {
  if (ctx.p % 12 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 12 for an order-12 character");
  return {ctx, (ctx.p - 1) / 12};
}

inline Complex char_eval(const MultCharacter& chi, std::int64_t x) { return chi(x); }
inline std::uint64_t char_order(const MultCharacter& chi) { return chi.order(); }

}  // namespace frobtrace
