#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "frobtrace/ecurves.hpp"
#include "test_util.hpp"

using namespace frobtrace;

TEST_CASE("character-sum count matches the frozen table at p = 13") {
  const FpContext ctx = make_context(13);
  // a(t,13) for t = 2..12, frozen from an independent exhaustive scan
  const std::vector<std::int32_t> expected{-2, 2, -5, 0, -1, -2, 3, 4, -1, -4, -6};
  CHECK(frobenius_traces(ctx) == expected);
}

TEST_CASE("character-sum count agrees with the naive (x,y) scan") {
  const FpContext ctx = make_context(13);
  for (std::uint32_t t = 2; t < 13; ++t) {
    const Cubic f = family_cubic(ctx, CurveFamily::t1728, t);
    CHECK(count_curve(ctx, f).count == naive_point_count(ctx, f));
  }
  for (CurveFamily fam : {CurveFamily::beukers_a, CurveFamily::beukers_b, CurveFamily::legendre,
                          CurveFamily::twisted}) {
    for (std::uint32_t t = 2; t < 13; ++t) {
      if (family_excludes(ctx, fam, t)) continue;
      const Cubic f = family_cubic(ctx, fam, t);
      CHECK(count_curve(ctx, f).count == naive_point_count(ctx, f));
    }
  }
}

TEST_CASE("the reduced model at p = 13, t = 2 is y^2 = 4x^3 + x + 1") {
  const FpContext ctx = make_context(13);
  const Cubic f = family_cubic(ctx, CurveFamily::t1728, 2);
  CHECK(f.c3 == 4);
  CHECK(f.c2 == 0);
  CHECK(f.c1 == 1);  // -27/(1-2) = 27 = 1 mod 13
  CHECK(f.c0 == 1);
  CHECK(count_curve(ctx, f).trace == -2);
}

TEST_CASE("count_curve rejects singular cubics") {
  const FpContext ctx = make_context(13);
  // Legendre model at t = 1 has a repeated root at x = 1
  expect_error(ErrorCode::singular, [&] { count_curve(ctx, Cubic{1, ctx.reduce(-2), 1, 0}); });
  expect_error(ErrorCode::singular, [&] { count_curve(ctx, Cubic{0, 1, 1, 1}); });
  expect_error(ErrorCode::singular, [&] { count_curve(ctx, Cubic{1, 0, 0, 0}); });  // y^2 = x^3
}

TEST_CASE("excluded parameters raise BadParameter") {
  const FpContext ctx = make_context(13);
  expect_error(ErrorCode::bad_parameter, [&] { trace_family(ctx, CurveFamily::t1728, 0); });
  expect_error(ErrorCode::bad_parameter, [&] { trace_family(ctx, CurveFamily::t1728, 1); });
  expect_error(ErrorCode::bad_parameter, [&] { trace_family(ctx, CurveFamily::legendre, 14); });
  expect_error(ErrorCode::bad_parameter, [&] { trace_family(ctx, CurveFamily::twisted, -1); });
  // Beukers families exclude exactly the discriminant-vanishing parameters
  for (CurveFamily fam : {CurveFamily::beukers_a, CurveFamily::beukers_b})
    for (std::uint32_t t = 0; t < 13; ++t) {
      if (family_excludes(ctx, fam, t))
        expect_error(ErrorCode::bad_parameter, [&] { trace_family(ctx, fam, t); });
      else
        CHECK_NOTHROW(trace_family(ctx, fam, t));
    }
}

TEST_CASE("all family traces respect the Hasse bound") {
  for (std::uint32_t p : {13u, 37u}) {
    const FpContext ctx = make_context(p);
    const double bound = 2.0 * std::sqrt(double(p));
    for (CurveFamily fam : {CurveFamily::t1728, CurveFamily::beukers_a, CurveFamily::beukers_b,
                            CurveFamily::legendre, CurveFamily::twisted})
      for (std::uint32_t t = 0; t < p; ++t) {
        if (family_excludes(ctx, fam, t)) continue;
        CHECK(std::abs(static_cast<double>(trace_family(ctx, fam, t))) <= bound);
      }
  }
}

TEST_CASE("class enumeration at p = 13: counts and the I(s,p) slice") {
  const auto classes = enumerate_classes(13);
  CHECK(classes.size() == 32);
  CHECK(count_classes_with_trace(classes, 4) == 6);  // = 2 H(-36)

  // orbit sizes partition the nonsingular (A,B) plane
  std::size_t total = 0;
  for (const auto& c : classes) total += c.orbit_size;
  std::size_t valid = 0;
  const FpContext ctx = make_context(13);
  for (std::uint32_t A = 0; A < 13; ++A)
    for (std::uint32_t B = 0; B < 13; ++B)
      if (ctx.reduce(4 * static_cast<std::int64_t>(ctx.pow_mod(A, 3)) +
                     27 * static_cast<std::int64_t>(ctx.mul(B, B))) != 0)
        ++valid;
  CHECK(total == valid);
}

TEST_CASE("classes per j-invariant: 2 generically, 4 at j=1728, 6 at j=0") {
  for (std::uint32_t p : {13u, 37u}) {
    const auto classes = enumerate_classes(p);
    std::map<std::uint32_t, std::vector<std::int64_t>> by_j;
    for (const auto& c : classes) by_j[c.j].push_back(c.trace);
    for (const auto& [j, traces] : by_j) {
      const std::size_t expected = (j == 0) ? 6 : (j == 1728 % p) ? 4 : 2;
      CHECK(traces.size() == expected);
      if (expected == 2) CHECK(traces[0] == -traces[1]);  // quadratic twist pair
    }
  }
}

TEST_CASE("j-invariant coverage: 1728/t hits each j outside {0,1728} once") {
  const std::uint32_t p = 13;
  const FpContext ctx = make_context(p);
  std::vector<std::uint32_t> js;
  for (std::uint32_t t = 2; t < p; ++t) js.push_back(ctx.mul(1728 % p, ctx.inv(t)));
  std::sort(js.begin(), js.end());
  CHECK(std::adjacent_find(js.begin(), js.end()) == js.end());
  CHECK(js.size() == p - 2);
  CHECK(std::find(js.begin(), js.end(), 0u) == js.end());
  CHECK(std::find(js.begin(), js.end(), 1728 % p) == js.end());
}

TEST_CASE("class enumeration is capped") {
  expect_error(ErrorCode::too_large, [] { enumerate_classes(211); });
}
