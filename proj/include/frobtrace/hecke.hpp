#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "frobtrace/classno.hpp"
#include "frobtrace/ecurves.hpp"
#include "frobtrace/exact.hpp"
#include "frobtrace/quaddecomp.hpp"

namespace frobtrace {

inline void require_weight(int k, int min_k) {
  if (k < min_k || k % 2 != 0)
    raise(ErrorCode::bad_weight, "weight must be even and >= " + std::to_string(min_k));
}

// G_k(s,p) = sum_{j=0}^{k/2-1} (-1)^j C(k-2-j, j) p^j s^{k-2j-2}, with the
// s^0 = 1 convention so the constant term is (-p)^{k/2-1} for every s.
// Equivalently (x^{k-1} - y^{k-1})/(x - y) with x+y = s, xy = p.
struct TracePolynomial {
  int k = 2;
  Int p;
  std::vector<Int> coeff;  // coeff[i] multiplies s^{2i}, i = 0..k/2-1

  Int eval(const Int& s) const {
    const Int s2 = s * s;
    Int v = coeff.back();
    for (std::size_t i = coeff.size() - 1; i-- > 0;) v = v * s2 + coeff[i];
    return v;
  }
};

inline TracePolynomial trace_polynomial(int k, const Int& p) {
  require_weight(k, 2);
  TracePolynomial g;
  g.k = k;
  g.p = p;
  const int m = k / 2 - 1;
  g.coeff.resize(m + 1);
  for (int j = 0; j <= m; ++j) {
    Int c = binomial(k - 2 - j, j) * int_pow(p, j);
    g.coeff[m - j] = (j % 2 == 0) ? c : -c;
  }
  return g;
}

inline Int gk_eval(int k, const Int& s, const Int& p) { return trace_polynomial(k, p).eval(s); }

// lambda(k,p) built from the two quadratic decompositions of p; the halves
// and thirds always resolve to an integer.
inline Rat lambda_rat(int k, const Int& p, const GaussianDecomp& gd, const EisensteinDecomp& ed) {
  require_weight(k, 4);
  const TracePolynomial g = trace_polynomial(k, p);
  const Rat gauss_part(g.eval(2 * Int(gd.a)) + g.eval(2 * Int(gd.b)), 2);
  const Rat eis_part(
      g.eval(Int(ed.c + ed.d)) + g.eval(Int(2 * ed.c - ed.d)) + g.eval(Int(ed.c - 2 * ed.d)), 3);
  return gauss_part + eis_part;
}

inline Int lambda_eval(int k, const Int& p, const GaussianDecomp& gd, const EisensteinDecomp& ed) {
  return as_integer(lambda_rat(k, p, gd, ed), "lambda(k,p)");
}

namespace detail {

// The G_k sums over the trace table only see |a(t,p)| (G_k is even in s), so
// collapse the t-sweep to a histogram of |a| before any bigint work.
inline std::vector<std::int64_t> abs_trace_histogram(std::span<const std::int32_t> traces) {
  std::int32_t amax = 0;
  for (std::int32_t a : traces) amax = std::max(amax, a < 0 ? -a : a);
  std::vector<std::int64_t> hist(static_cast<std::size_t>(amax) + 1, 0);
  for (std::int32_t a : traces) ++hist[static_cast<std::size_t>(a < 0 ? -a : a)];
  return hist;
}

}  // namespace detail

inline Int power_sum(std::span<const std::int32_t> traces, unsigned n) {
  if (n % 2 != 0) raise(ErrorCode::bad_argument, "trace power sums used here have even n");
  const auto hist = detail::abs_trace_histogram(traces);
  Int total = 0;
  for (std::size_t a = 0; a < hist.size(); ++a)
    if (hist[a] != 0) total += hist[a] * int_pow(Int(a), n);
  return total;
}

inline Int gk_sum_over_traces(int k, const Int& p, std::span<const std::int32_t> traces) {
  const TracePolynomial g = trace_polynomial(k, p);
  const auto hist = detail::abs_trace_histogram(traces);
  Int total = 0;
  for (std::size_t a = 0; a < hist.size(); ++a)
    if (hist[a] != 0) total += hist[a] * g.eval(Int(a));
  return total;
}

// Tr_k(p) on level-1 weight-k cusp forms, closed form over exact traces of
// Frobenius:  -1 - lambda(k,p) - sum_{t=2}^{p-1} G_k(a(t,p), p).
inline Int trace_via_frobenius(int k, const Int& p, std::span<const std::int32_t> traces,
                               const GaussianDecomp& gd, const EisensteinDecomp& ed) {
  require_weight(k, 4);
  return -1 - lambda_eval(k, p, gd, ed) - gk_sum_over_traces(k, p, traces);
}

// b_i = p^{m-i} [C(2m, m-i) - C(2m, m-i-1)]; b_m = 1 by the C(.,-1) = 0
// convention.  These invert the weight ladder: s^{2m} = sum_i b_i G_{2i+2}(s,p).
inline std::vector<Int> recursion_coeffs(int m, const Int& p) {
  if (m < 0) raise(ErrorCode::bad_argument, "need m >= 0");
  std::vector<Int> b(m + 1);
  for (int i = 0; i <= m; ++i)
    b[i] = int_pow(p, m - i) * (binomial(2 * m, m - i) - binomial(2 * m, m - i - 1));
  return b;
}

// Inductive form of the same trace, consuming previously computed traces of
// lower weight.  prior_traces maps weight 2i+2 -> Tr_{2i+2}(p) for 1 <= i <= m-1.
inline Int trace_via_recursion(int k, const Int& p, std::span<const std::int32_t> traces,
                               const GaussianDecomp& gd, const EisensteinDecomp& ed,
                               const std::map<int, Int>& prior_traces) {
  require_weight(k, 4);
  const int m = k / 2 - 1;
  const std::vector<Int> b = recursion_coeffs(m, p);
  Int total = -1 - lambda_eval(2 * m + 2, p, gd, ed) + b[0] * (p - 2) - power_sum(traces, 2 * m);
  for (int i = 1; i <= m - 1; ++i) {
    const auto it = prior_traces.find(2 * i + 2);
    if (it == prior_traces.end())
      raise(ErrorCode::missing_prior, "missing trace of weight " + std::to_string(2 * i + 2));
    total -= b[i] * (1 + lambda_eval(2 * i + 2, p, gd, ed));
    total -= b[i] * it->second;
  }
  return total;
}

// Hijikata-style evaluation from class numbers alone:
//   Tr_k(p) = -1 - (1/2) h*(-4p) (-p)^{k/2-1}
//             - sum_{0<s<2 sqrt p} G_k(s,p) sum_{f|ell} h*((s^2-4p)/f^2) + delta(k),
// with delta(2) = p+1.  The 1/2 on the h*(-4p) term balances exactly: the
// k = 2 instance must evaluate to 0.
inline Int trace_via_hijikata(int k, std::uint32_t p) {
  require_weight(k, 2);
  if (p % 12 != 1) raise(ErrorCode::bad_residue, "p must be 1 mod 12");
  const Int P(p);
  const Int neg_p_pow = int_pow(-P, static_cast<unsigned>(k / 2 - 1));
  Rat total = Rat(-1) - class_number(-4 * static_cast<std::int64_t>(p)).h_star * Rat(neg_p_pow) / 2;
  const TracePolynomial g = trace_polynomial(k, P);
  for (std::int64_t s = 1; s * s < 4 * static_cast<std::int64_t>(p); ++s)
    total -= Rat(g.eval(Int(s))) * hstar_divisor_sum(s, p);
  if (k == 2) total += P + 1;
  return as_integer(total, "Hijikata trace");
}

// tau(p) by direct weight-12 specialization, with x = a^2 b^2 and y = cd:
//   tau(p) = -1 - 8p^5 + 80p^3 x - 256 p x^2 + 27 y^2 p^3 - 27 y^3 p^2
//            - sum_t G_12(a(t,p), p).
inline Int tau_closed_form(const Int& p, std::span<const std::int32_t> traces,
                           const GaussianDecomp& gd, const EisensteinDecomp& ed) {
  const Int x = Int(gd.a) * gd.a * gd.b * gd.b;
  const Int y = Int(ed.c) * ed.d;
  return -1 - 8 * int_pow(p, 5) + 80 * int_pow(p, 3) * x - 256 * p * x * x +
         27 * y * y * int_pow(p, 3) - 27 * y * y * y * p * p - gk_sum_over_traces(12, p, traces);
}

// tau(p) from tenth powers of the traces (equivalently, of p^2 phi(1-t) times
// the squared hypergeometric values).
inline Int tau_tenth_power(const Int& p, std::span<const std::int32_t> traces,
                           const GaussianDecomp& gd, const EisensteinDecomp& ed) {
  const Int eis = int_pow(Int(ed.c + ed.d), 10) + int_pow(Int(2 * ed.c - ed.d), 10) +
                  int_pow(Int(ed.c - 2 * ed.d), 10);
  const Rat v = Rat(42 * int_pow(p, 6) - 90 * int_pow(p, 4) - 75 * int_pow(p, 3) -
                    35 * p * p - 9 * p - 1 - 512 * (int_pow(Int(gd.a), 10) + int_pow(Int(gd.b), 10))) -
                Rat(eis, 3) - Rat(power_sum(traces, 10));
  return as_integer(v, "tau from tenth powers");
}

// tau(p) from twelfth powers; the intermediate rationals have denominators
// dividing 33p and must cancel to an integer.
inline Int tau_twelfth_power(const Int& p, std::span<const std::int32_t> traces,
                             const GaussianDecomp& gd, const EisensteinDecomp& ed) {
  const Int eis = int_pow(Int(ed.c + ed.d), 12) + int_pow(Int(2 * ed.c - ed.d), 12) +
                  int_pow(Int(ed.c - 2 * ed.d), 12);
  const Rat v = Rat(12 * int_pow(p, 6) - 27 * int_pow(p, 4) - 25 * int_pow(p, 3) - 14 * p * p) -
                Rat(54 * p, 11) - 1 - Rat(1, 11 * p) -
                Rat(2048 * (int_pow(Int(gd.a), 12) + int_pow(Int(gd.b), 12)), 11 * p) -
                Rat(eis, 33 * p) - Rat(power_sum(traces, 12), 11 * p);
  return as_integer(v, "tau from twelfth powers");
}

// Residuals of the six exact power-sum identities tying sum_t a(t,p)^n to p,
// the decompositions, and tau(p).  Every residual must vanish.
struct PowerSumReport {
  std::uint32_t p = 0;
  std::array<Int, 6> residuals;  // exponents n = 2, 4, 6, 8, 10, 12

  bool all_zero() const {
    for (const auto& r : residuals)
      if (r != 0) return false;
    return true;
  }
};

inline PowerSumReport power_sum_identities(std::uint32_t pu, std::span<const std::int32_t> traces,
                                           const GaussianDecomp& gd, const EisensteinDecomp& ed,
                                           const Int& tau_p) {
  const Int p(pu);
  const Int a(gd.a), b(gd.b);
  const auto U = [&](unsigned n) {
    return int_pow(Int(ed.c + ed.d), n) + int_pow(Int(2 * ed.c - ed.d), n) +
           int_pow(Int(ed.c - 2 * ed.d), n);
  };
  PowerSumReport r;
  r.p = pu;
  r.residuals[0] = p * p - 4 * p - 1 - power_sum(traces, 2);
  r.residuals[1] =
      2 * int_pow(p, 3) - 6 * p * p - 3 * p - 8 * (int_pow(a, 4) + int_pow(b, 4)) - 1 -
      power_sum(traces, 4);
  r.residuals[2] = as_integer(
      Rat(5 * int_pow(p, 4) - 9 * p * p - 5 * p - 1 - 32 * (int_pow(a, 6) + int_pow(b, 6))) -
          Rat(U(6), 3) - Rat(power_sum(traces, 6)),
      "weight-8 power sum");
  r.residuals[3] = as_integer(
      Rat(14 * int_pow(p, 5) - 28 * int_pow(p, 3) - 20 * p * p - 7 * p - 1 -
          128 * (int_pow(a, 8) + int_pow(b, 8))) -
          Rat(U(8), 3) - Rat(power_sum(traces, 8)),
      "weight-10 power sum");
  r.residuals[4] = as_integer(
      Rat(42 * int_pow(p, 6) - 90 * int_pow(p, 4) - 75 * int_pow(p, 3) - 35 * p * p - 9 * p - 1 -
          512 * (int_pow(a, 10) + int_pow(b, 10))) -
          Rat(U(10), 3) - Rat(power_sum(traces, 10)) - Rat(tau_p),
      "weight-12 power sum");
  r.residuals[5] = as_integer(
      Rat(132 * int_pow(p, 7) - 297 * int_pow(p, 5) - 275 * int_pow(p, 4) - 154 * int_pow(p, 3) -
          54 * p * p - 1 - 11 * p - 11 * p * tau_p -
          2048 * (int_pow(a, 12) + int_pow(b, 12))) -
          Rat(U(12), 3) - Rat(power_sum(traces, 12)),
      "weight-14 power sum");
  return r;
}

}  // namespace frobtrace
