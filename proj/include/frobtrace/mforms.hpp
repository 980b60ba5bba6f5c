#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "frobtrace/exact.hpp"
#include "frobtrace/ffield.hpp"

namespace frobtrace {

// Truncated q-expansion with exact integer coefficients a_0..a_N.  All ring
// operations are truncation-stable: coefficients up to N never depend on
// anything beyond N.
class QSeries {
 public:
  explicit QSeries(std::size_t order) : c_(order + 1) {}

  static QSeries one(std::size_t order) {
    QSeries s(order);
    s.c_[0] = 1;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const Int& operator[](std::size_t i) const { return c_[i]; }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) {
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  QSeries& operator*=(const Int& k) {
    for (auto& v : c_) v *= k;
    return *this;
  }

  QSeries pow(unsigned e) const {
    QSeries r = one(order());
    QSeries base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

 private:
  std::vector<Int> c_;
};

// sigma_k(n) = sum of k-th powers of divisors.
inline Int sigma(unsigned k, std::uint64_t n) {
  if (n == 0) raise(ErrorCode::bad_argument, "sigma needs n >= 1");
  Int total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += int_pow(Int(d), k);
    const std::uint64_t e = n / d;
    if (e != d) total += int_pow(Int(e), k);
  }
  return total;
}

// Normalized Eisenstein series: E4 = 1 + 240 sum sigma_3(n) q^n,
// E6 = 1 - 504 sum sigma_5(n) q^n.
inline QSeries eisenstein_series(int weight, std::size_t order) {
  if (weight != 4 && weight != 6) raise(ErrorCode::bad_weight, "Eisenstein weight must be 4 or 6");
  QSeries s = QSeries::one(order);
  const Int coef = (weight == 4) ? 240 : -504;
  const unsigned k = (weight == 4) ? 3 : 5;
  for (std::size_t n = 1; n <= order; ++n) s[n] = coef * sigma(k, n);
  return s;
}

// Delta = q prod_{n>=1} (1 - q^n)^24 = sum tau(n) q^n.
inline QSeries delta_series(std::size_t order) {
  if (order < 1) raise(ErrorCode::bad_argument, "need order >= 1");
  std::vector<Int> c(order);  // coefficients of prod (1-q^n)^24 up to order-1
  c[0] = 1;
  for (std::size_t n = 1; n < order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = order - 1; i >= n; --i) c[i] -= c[i - n];
  QSeries d(order);
  for (std::size_t i = 0; i < order; ++i) d[i + 1] = c[i];
  if (d[1] != 1 || (order >= 2 && d[2] != -24))
    raise(ErrorCode::internal_error, "delta expansion failed self-check");
  return d;
}

namespace detail {

// Normalized generators of the one-dimensional cusp spaces: Delta, Delta*E4,
// Delta*E6, Delta*E4^2, Delta*E4*E6 for weights 12, 16, 18, 20, 22.
// Coefficients are copied out under the lock; the cache regrows on demand.
inline Int cusp_coefficient(int k, std::size_t n) {
  struct CuspForms {
    std::size_t order = 0;
    QSeries delta{1}, f16{1}, f18{1}, f20{1}, f22{1};
  };
  static std::mutex mu;
  static CuspForms cache;
  std::lock_guard lock(mu);
  if (cache.order < n) {
    const std::size_t order = std::max<std::size_t>(n, 64);
    CuspForms f;
    f.order = order;
    f.delta = delta_series(order);
    const QSeries e4 = eisenstein_series(4, order);
    const QSeries e6 = eisenstein_series(6, order);
    f.f16 = f.delta * e4;
    f.f18 = f.delta * e6;
    f.f20 = f.f16 * e4;
    f.f22 = f.f16 * e6;
    cache = std::move(f);
  }
  switch (k) {
    case 12: return cache.delta[n];
    case 16: return cache.f16[n];
    case 18: return cache.f18[n];
    case 20: return cache.f20[n];
    case 22: return cache.f22[n];
  }
  raise(ErrorCode::internal_error, "no cached form of that weight");
}

}  // namespace detail

inline Int ramanujan_tau(std::uint32_t n) {
  if (n == 0) raise(ErrorCode::bad_argument, "tau needs n >= 1");
  return detail::cusp_coefficient(12, n);
}

// Tr_k(p) for 4 <= k <= 22 even: zero when S_k = 0, otherwise the p-th
// coefficient of the normalized generator.  Weight 24 is the first weight
// with dim S_k >= 2, where a single-form oracle would silently be wrong.
inline Int trace_oracle(int k, std::uint32_t p) {
  if (k < 4 || k % 2 != 0) raise(ErrorCode::bad_weight, "weight must be even and >= 4");
  if (k >= 24) raise(ErrorCode::unsupported_weight, "dim S_k >= 2 for k >= 24");
  if (!is_prime_u64(p)) raise(ErrorCode::bad_argument, "oracle defined for prime p");
  if (p > 10000) raise(ErrorCode::too_large, "q-expansion oracle capped at p <= 10000");
  if (k == 4 || k == 6 || k == 8 || k == 10 || k == 14) return 0;
  return detail::cusp_coefficient(k, p);
}

}  // namespace frobtrace
