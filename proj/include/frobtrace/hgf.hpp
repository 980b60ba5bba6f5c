#pragma once

#include <vector>

#include "frobtrace/charsum.hpp"

namespace frobtrace {

// Argument pack for the general n+1_F_n over F_p: upper characters A_0..A_n,
// lower characters B_1..B_n, argument x.
struct HgSpec {
  std::vector<MultCharacter> upper;
  std::vector<MultCharacter> lower;
  std::uint32_t x = 0;
};

// General hypergeometric sum over all p-1 characters chi = T^j:
//   (p/(p-1)) sum_chi binom(A0 chi, chi) prod_i binom(Ai chi, Bi chi) chi(x).
// O(p) per evaluation through the Gauss table, except when some Ai/Bi ratio is
// trivial, in which case that column falls back to the O(p) defining sum.
inline Complex hg_general(const GaussTable& table, const HgSpec& spec) {
  const FpContext& ctx = table.context();
  if (spec.upper.size() < 2 || spec.lower.size() + 1 != spec.upper.size())
    raise(ErrorCode::bad_argument, "need n+1 upper and n lower characters with n >= 1");
  const std::uint32_t p = ctx.p;
  const std::uint32_t xr = ctx.reduce(spec.x);
  if (xr == 0) return {0.0, 0.0};  // chi(0) = 0 for every chi
  const std::uint32_t lx = ctx.dlog[xr];
  const std::size_t n = spec.lower.size();

  Complex total{};
  for (std::uint32_t j = 0; j < p - 1; ++j) {
    Complex term = greene_binom(table, static_cast<std::int64_t>(spec.upper[0].exponent()) + j, j);
    for (std::size_t i = 0; i < n; ++i)
      term *= greene_binom(table, static_cast<std::int64_t>(spec.upper[i + 1].exponent()) + j,
                           static_cast<std::int64_t>(spec.lower[i].exponent()) + j);
    total += term * ctx.unit_root(static_cast<std::uint64_t>(j) * lx);
  }
  return total * (static_cast<double>(p) / (p - 1));
}

// 2F1(A, B; C | x) as a single character sum:
//   eps(x) * (BC(-1)/p) * sum_y B(y) (conj(B) C)(1-y) conj(A)(1-x y).
// This is the fast O(p) route used by the verification sweeps.
inline Complex hg_2f1(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C,
                      std::int64_t x) {
  const FpContext& ctx = A.context();
  const std::uint32_t p = ctx.p;
  const std::int64_t xr = ctx.reduce(x);
  if (xr == 0) return {0.0, 0.0};
  const MultCharacter Ainv = A.inverse();
  const MultCharacter BinvC = B.inverse() * C;
  Complex s{};
  for (std::uint32_t y = 1; y < p; ++y)  // B(0) = 0 kills y = 0
    s += B(y) * BinvC(1 - static_cast<std::int64_t>(y)) * Ainv(1 - xr * y);
  return (B * C)(-1) * s / static_cast<double>(p);
}

// The 2F1(xi, xi^5; eps | t) attached to the curve family with j-invariant
// 1728/t.  xi_unit selects which order-12 character: xi = T^{u (p-1)/12} with
// gcd(u, 12) = 1.  Satisfies p * hg_t1728(t) = psi_t1728(t) * a(t,p).
inline Complex hg_t1728(const FpContext& ctx, std::int64_t t, std::uint32_t xi_unit = 1) {
  if (ctx.p % 12 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 12");
  if (std::gcd(xi_unit, 12u) != 1) raise(ErrorCode::bad_argument, "xi_unit must be a unit mod 12");
  const std::uint32_t tr = ctx.reduce(t);
  if (tr == 0 || tr == 1) raise(ErrorCode::bad_argument, "t must avoid {0,1}");
  const std::uint32_t s = (ctx.p - 1) / 12;
  const MultCharacter xi = character(ctx, static_cast<std::int64_t>(s) * xi_unit);
  return hg_2f1(xi, xi.pow(5), trivial_char(ctx), tr);
}

// psi(t) = -phi(2) xi^{-3}(1-t), the unit-magnitude factor pairing the 2F1
// above with the trace of Frobenius.
inline Complex psi_t1728(const FpContext& ctx, std::int64_t t, std::uint32_t xi_unit = 1) {
  if (ctx.p % 12 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 12");
  const std::uint32_t tr = ctx.reduce(t);
  if (tr == 0 || tr == 1) raise(ErrorCode::bad_argument, "t must avoid {0,1}");
  const std::uint32_t s = (ctx.p - 1) / 12;
  const MultCharacter xi = character(ctx, static_cast<std::int64_t>(s) * xi_unit);
  return -quadratic_char(ctx)(2) * xi.pow(-3)(1 - static_cast<std::int64_t>(tr));
}

// Gauss-sum form of the same 2F1:
//   (T^{3s}(4(1-t)) / (sqrt(p)(p-1))) sum_k G_{6s-2k} G_{3k} G_k^{-1} T^k(4) T^{-k}(27/(1-t)).
inline Complex hg_t1728_gauss_form(const GaussTable& table, std::int64_t t) {
  const FpContext& ctx = table.context();
  if (ctx.p % 12 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 12");
  const std::uint32_t tr = ctx.reduce(t);
  if (tr == 0 || tr == 1) raise(ErrorCode::bad_argument, "t must avoid {0,1}");
  const std::uint32_t p = ctx.p;
  const std::int64_t s = (p - 1) / 12;
  const std::uint32_t w = ctx.mul(27, ctx.inv(ctx.reduce(1 - static_cast<std::int64_t>(tr))));
  Complex sum{};
  for (std::int64_t k = 0; k < p - 1; ++k) {
    sum += table(6 * s - 2 * k) * table(3 * k) / table(k) * character(ctx, k)(4) *
           character(ctx, -k)(w);
  }
  const Complex pre = character(ctx, 3 * s)(4 * (1 - static_cast<std::int64_t>(tr)));
  return pre * sum / (std::sqrt(static_cast<double>(p)) * (p - 1));
}

// Gauss-sum form of the trace of Frobenius on the same family:
//   a(t,p) = -phi(3/(1-t)) - phi(3/(1-t)) / (sqrt(p)(p-1))
//            * sum_k G_{-k} G_{3k} G_{6s-2k} T^k(-4) T^{-k}(27/(1-t)).
inline Complex trace_t1728_gauss_form(const GaussTable& table, std::int64_t t) {
  const FpContext& ctx = table.context();
  if (ctx.p % 12 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 12");
  const std::uint32_t tr = ctx.reduce(t);
  if (tr == 0 || tr == 1) raise(ErrorCode::bad_argument, "t must avoid {0,1}");
  const std::uint32_t p = ctx.p;
  const std::int64_t s = (p - 1) / 12;
  const std::uint32_t inv1t = ctx.inv(ctx.reduce(1 - static_cast<std::int64_t>(tr)));
  const std::uint32_t w = ctx.mul(27, inv1t);
  Complex sum{};
  for (std::int64_t k = 0; k < p - 1; ++k) {
    sum += table(-k) * table(3 * k) * table(6 * s - 2 * k) * character(ctx, k)(-4) *
           character(ctx, -k)(w);
  }
  const double phi3 = ctx.legendre(ctx.mul(3, inv1t));
  return -phi3 - phi3 * sum / (std::sqrt(static_cast<double>(p)) * (p - 1));
}

}  // namespace frobtrace
