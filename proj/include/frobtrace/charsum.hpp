#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "frobtrace/ffield.hpp"

namespace frobtrace {

// Tolerance for numerical character-sum identities.  Products of three Gauss
// sums reach magnitude p^(3/2), so the comparison scale has to grow with it.
inline double identity_tolerance(std::uint32_t p) {
  return 100.0 * std::numeric_limits<double>::epsilon() * std::pow(static_cast<double>(p), 1.5);
}

inline bool approx_equal(const Complex& a, const Complex& b, double tol) {
  return std::abs(a - b) <= tol;
}

// theta(alpha) = zeta^alpha with zeta = e^{2 pi i / p}.
inline Complex theta(const FpContext& ctx, std::int64_t alpha) {
  return std::polar(1.0, 2.0 * std::numbers::pi * ctx.reduce(alpha) / ctx.p);
}

// Table of G_m = G(T^m) = sum_x T^m(x) zeta^x for m = 0..p-2.
struct GaussTable {
  const FpContext* ctx = nullptr;
  std::vector<Complex> G;        // G[m] = G(T^m)
  std::vector<Complex> p_roots;  // p_roots[a] = zeta^a

  const FpContext& context() const { return *ctx; }

  const Complex& operator()(std::int64_t m) const { return G[ctx->reduce_exp(m)]; }
};

inline GaussTable build_gauss_table(const FpContext& ctx) {
  GaussTable t;
  t.ctx = &ctx;
  const std::uint32_t p = ctx.p;
  t.p_roots.resize(p);
  for (std::uint32_t a = 0; a < p; ++a)
    t.p_roots[a] = std::polar(1.0, 2.0 * std::numbers::pi * a / p);

  // One O(p^2) fill, reused by every downstream identity.  Walk x = g^e so the
  // character value is a direct unit-root lookup.
  t.G.assign(p - 1, Complex{});
  for (std::uint32_t m = 0; m < p - 1; ++m) {
    Complex s{};
    std::uint64_t me = 0;
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < p - 1; ++e) {
      s += ctx.unit_roots[me] * t.p_roots[x];
      me += m;
      if (me >= p - 1) me -= p - 1;
      x = ctx.mul(x, ctx.g);
    }
    t.G[m] = s;
  }
  return t;
}

inline Complex gauss_sum(const GaussTable& table, std::int64_t m) { return table(m); }

// Greene's binomial coefficient, a normalized Jacobi sum:
//   binom(A, B) = (B(-1)/p) * sum_x A(x) conj(B)(1-x).
inline Complex greene_binom_direct(const MultCharacter& A, const MultCharacter& B) {
  const FpContext& ctx = A.context();
  const MultCharacter Binv = B.inverse();
  Complex s{};
  for (std::uint32_t x = 0; x < ctx.p; ++x)
    s += A(x) * Binv(1 - static_cast<std::int64_t>(x));
  return B(-1) * s / static_cast<double>(ctx.p);
}

// binom(T^m, T^n) via the Gauss-Jacobi relation G_m G_{-n} T^n(-1) / (G_{m-n} p),
// valid whenever T^{m-n} != eps; the degenerate diagonal falls back to the
// defining sum.
inline Complex greene_binom(const GaussTable& table, std::int64_t m, std::int64_t n) {
  const FpContext& ctx = table.context();
  const std::uint32_t mr = ctx.reduce_exp(m), nr = ctx.reduce_exp(n);
  if (mr != nr) {
    const Complex tn_m1 = ctx.unit_root(static_cast<std::uint64_t>(nr) * ((ctx.p - 1) / 2));
    return table(mr) * table(-static_cast<std::int64_t>(nr)) * tn_m1 /
           (table(static_cast<std::int64_t>(mr) - nr) * static_cast<double>(ctx.p));
  }
  return greene_binom_direct(character(ctx, mr), character(ctx, nr));
}

}  // namespace frobtrace
