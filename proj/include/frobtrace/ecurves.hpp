#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/ffield.hpp"

namespace frobtrace {

// The curve families under study.  Each is y^2 = f(x) for a cubic f whose
// coefficients depend on the parameter t:
//   t1728:     y^2 = 4x^3 - (27/(1-t)) x - 27/(1-t)   (j-invariant 1728/t)
//   beukers_a: y^2 = x^3 + t x + 1
//   beukers_b: y^2 = x^3 - x - t
//   legendre:  y^2 = x(x-1)(x-t)
//   twisted:   y^2 = (x-1)(x^2+t)
enum class CurveFamily { t1728, beukers_a, beukers_b, legendre, twisted };

inline const char* family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::t1728: return "t1728";
    case CurveFamily::beukers_a: return "beukers-a";
    case CurveFamily::beukers_b: return "beukers-b";
    case CurveFamily::legendre: return "legendre";
    case CurveFamily::twisted: return "twisted";
  }
  return "?";
}

// f(x) = c3 x^3 + c2 x^2 + c1 x + c0 over F_p.
struct Cubic {
  std::uint32_t c3 = 0, c2 = 0, c1 = 0, c0 = 0;
};

struct CurvePointCount {
  std::uint32_t p = 0;
  Cubic f;
  std::uint64_t count = 0;  // #E(F_p), point at infinity included
  std::int64_t trace = 0;   // p + 1 - count
};

inline std::uint32_t cubic_eval(const FpContext& ctx, const Cubic& f, std::uint32_t x) {
  std::uint64_t v = f.c3;
  v = (v * x + f.c2) % ctx.p;
  v = (v * x + f.c1) % ctx.p;
  v = (v * x + f.c0) % ctx.p;
  return static_cast<std::uint32_t>(v);
}

inline std::uint32_t cubic_discriminant(const FpContext& ctx, const Cubic& f) {
  // disc = 18 c3 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c3 c1^3 - 27 c3^2 c0^2
  const auto& m = ctx;
  std::uint32_t t1 = m.mul(m.mul(m.mul(18 % ctx.p, f.c3), m.mul(f.c2, f.c1)), f.c0);
  std::uint32_t t2 = m.mul(m.mul(4, m.mul(f.c2, m.mul(f.c2, f.c2))), f.c0);
  std::uint32_t t3 = m.mul(m.mul(f.c2, f.c2), m.mul(f.c1, f.c1));
  std::uint32_t t4 = m.mul(m.mul(4, f.c3), m.mul(f.c1, m.mul(f.c1, f.c1)));
  std::uint32_t t5 = m.mul(m.mul(27 % ctx.p, m.mul(f.c3, f.c3)), m.mul(f.c0, f.c0));
  std::int64_t d = static_cast<std::int64_t>(t1) - t2 + t3 - t4 - t5;
  return ctx.reduce(d);
}

// Exact count of points on y^2 = f(x) via the quadratic-character sum
//   #E = p + 1 + sum_x phi(f(x)),
// O(p) per curve.  The naive O(p^2) scan below serves as a secondary oracle.
inline CurvePointCount count_curve(const FpContext& ctx, const Cubic& f) {
  if (f.c3 % ctx.p == 0) raise(ErrorCode::singular, "leading coefficient vanishes mod p");
  if (cubic_discriminant(ctx, f) == 0) raise(ErrorCode::singular, "cubic discriminant vanishes mod p");
  std::int64_t s = 0;
  for (std::uint32_t x = 0; x < ctx.p; ++x) s += ctx.quad[cubic_eval(ctx, f, x)];
  CurvePointCount r;
  r.p = ctx.p;
  r.f = f;
  r.count = static_cast<std::uint64_t>(static_cast<std::int64_t>(ctx.p) + 1 + s);
  r.trace = -s;
  return r;
}

inline std::uint64_t naive_point_count(const FpContext& ctx, const Cubic& f) {
  std::uint64_t n = 1;  // infinity
  for (std::uint32_t x = 0; x < ctx.p; ++x) {
    const std::uint32_t fx = cubic_eval(ctx, f, x);
    for (std::uint32_t y = 0; y < ctx.p; ++y)
      if (ctx.mul(y, y) == fx) ++n;
  }
  return n;
}

inline bool family_excludes(const FpContext& ctx, CurveFamily fam, std::int64_t t) {
  const std::uint32_t tr = ctx.reduce(t);
  switch (fam) {
    case CurveFamily::t1728:
    case CurveFamily::legendre:
      return tr == 0 || tr == 1;
    case CurveFamily::twisted:
      return tr == 0 || tr == ctx.p - 1;
    case CurveFamily::beukers_a:  // discriminant -(4t^3+27)
      return ctx.reduce(4 * static_cast<std::int64_t>(ctx.pow_mod(tr, 3)) + 27) == 0;
    case CurveFamily::beukers_b:  // discriminant 4-27t^2
      return ctx.reduce(27 * static_cast<std::int64_t>(ctx.mul(tr, tr)) - 4) == 0;
  }
  return true;
}

inline Cubic family_cubic(const FpContext& ctx, CurveFamily fam, std::int64_t t) {
  if (family_excludes(ctx, fam, t))
    raise(ErrorCode::bad_parameter,
          std::string("t excluded for family ") + family_name(fam));
  const std::uint32_t tr = ctx.reduce(t);
  switch (fam) {
    case CurveFamily::t1728: {
      const std::uint32_t c = ctx.mul(27 % ctx.p, ctx.inv(ctx.reduce(1 - static_cast<std::int64_t>(tr))));
      return {4, 0, ctx.reduce(-static_cast<std::int64_t>(c)), ctx.reduce(-static_cast<std::int64_t>(c))};
    }
    case CurveFamily::beukers_a:
      return {1, 0, tr, 1};
    case CurveFamily::beukers_b:
      return {1, 0, ctx.p - 1, ctx.reduce(-static_cast<std::int64_t>(tr))};
    case CurveFamily::legendre:  // x(x-1)(x-t) = x^3 - (1+t)x^2 + t x
      return {1, ctx.reduce(-1 - static_cast<std::int64_t>(tr)), tr, 0};
    case CurveFamily::twisted:  // (x-1)(x^2+t) = x^3 - x^2 + t x - t
      return {1, ctx.p - 1, tr, ctx.reduce(-static_cast<std::int64_t>(tr))};
  }
  raise(ErrorCode::bad_parameter, "unknown family");
}

inline std::int64_t trace_family(const FpContext& ctx, CurveFamily fam, std::int64_t t) {
  return count_curve(ctx, family_cubic(ctx, fam, t)).trace;
}

// a(t,p) on the j = 1728/t family for t = 2..p-1 (index t-2).
inline std::vector<std::int32_t> frobenius_traces(const FpContext& ctx) {
  std::vector<std::int32_t> out;
  out.reserve(ctx.p - 2);
  for (std::uint32_t t = 2; t < ctx.p; ++t)
    out.push_back(static_cast<std::int32_t>(trace_family(ctx, CurveFamily::t1728, t)));
  return out;
}

// One F_p-isomorphism class of y^2 = x^3 + Ax + B; (A,B) is the orbit
// representative under (A,B) ~ (u^4 A, u^6 B), u in F_p^x.
struct IsoClass {
  std::uint32_t A = 0, B = 0;
  std::int64_t trace = 0;
  std::uint32_t j = 0;
  std::uint32_t orbit_size = 0;
};

// Exhaustive partition of all nonsingular short-Weierstrass curves over F_p
// into F_p-isomorphism classes.  Quadratic twists stay separate, which is the
// point: the class-count identities are statements about Ell_{F_p}.
inline std::vector<IsoClass> enumerate_classes(std::uint32_t p, std::uint32_t oracle_bound = 200) {
  if (p > oracle_bound)
    raise(ErrorCode::too_large, "class enumeration capped at p <= " + std::to_string(oracle_bound));
  const FpContext ctx = make_context(p);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(p) * p, 0);
  // u^4, u^6 for all u, computed once
  std::vector<std::uint32_t> u4(p), u6(p);
  for (std::uint32_t u = 1; u < p; ++u) {
    const std::uint32_t u2 = ctx.mul(u, u);
    u4[u] = ctx.mul(u2, u2);
    u6[u] = ctx.mul(u4[u], u2);
  }
  std::vector<IsoClass> classes;
  for (std::uint32_t A = 0; A < p; ++A) {
    for (std::uint32_t B = 0; B < p; ++B) {
      const std::uint32_t fourA3 = ctx.mul(4, ctx.mul(A, ctx.mul(A, A)));
      const std::uint32_t disc = ctx.reduce(static_cast<std::int64_t>(fourA3) +
                                            ctx.mul(27 % p, ctx.mul(B, B)));
      if (disc == 0) continue;
      if (seen[static_cast<std::size_t>(A) * p + B]) continue;
      std::uint32_t orbit = 0;
      for (std::uint32_t u = 1; u < p; ++u) {
        auto& mark = seen[static_cast<std::size_t>(ctx.mul(u4[u], A)) * p + ctx.mul(u6[u], B)];
        if (!mark) {
          mark = 1;
          ++orbit;
        }
      }
      IsoClass cls;
      cls.A = A;
      cls.B = B;
      cls.orbit_size = orbit;
      cls.trace = count_curve(ctx, Cubic{1, 0, A, B}).trace;
      cls.j = ctx.mul(ctx.mul(1728 % p, fourA3), ctx.inv(disc));
      classes.push_back(cls);
    }
  }
  return classes;
}

// #I(s,p): classes with #E(F_p) = p + 1 +- s.
inline std::size_t count_classes_with_trace(const std::vector<IsoClass>& classes, std::int64_t s) {
  std::size_t n = 0;
  for (const auto& c : classes)
    if (c.trace == s || c.trace == -s) ++n;
  return n;
}

}  // namespace frobtrace
