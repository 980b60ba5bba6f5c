#include <catch2/catch_amalgamated.hpp>

#include "frobtrace/ecurves.hpp"
#include "frobtrace/hgf.hpp"
#include "test_util.hpp"

using namespace frobtrace;

TEST_CASE("single-sum 2F1 agrees with the general definition") {
  for (std::uint32_t p : {13u, 37u}) {
    const FpContext ctx = make_context(p);
    const GaussTable table = build_gauss_table(ctx);
    const std::uint32_t s = (p - 1) / 12;
    const std::uint32_t exps[4][3] = {
        {s, 5 * s, 0}, {3, 7, 2}, {(p - 1) / 2, (p - 1) / 2, 0}, {2, 2, 2}};
    for (const auto& e : exps) {
      const MultCharacter A = character(ctx, e[0]), B = character(ctx, e[1]),
                          C = character(ctx, e[2]);
      for (std::uint32_t x = 0; x < p; ++x) {
        const HgSpec spec{{A, B}, {C}, x};
        CHECK(std::abs(hg_2f1(A, B, C, x) - hg_general(table, spec)) < identity_tolerance(p));
      }
    }
  }
}

TEST_CASE("hypergeometric functions vanish at argument 0") {
  const FpContext ctx = make_context(13);
  const GaussTable table = build_gauss_table(ctx);
  const MultCharacter xi = order12_char(ctx);
  CHECK(hg_2f1(xi, xi.pow(5), trivial_char(ctx), 0) == Complex{0, 0});
  const HgSpec spec{{xi, xi.pow(5)}, {trivial_char(ctx)}, 0};
  CHECK(hg_general(table, spec) == Complex{0, 0});
}

TEST_CASE("argument reflection x -> 1-x") {
  const FpContext ctx = make_context(13);
  const std::uint32_t exps[3][3] = {{1, 5, 0}, {3, 7, 2}, {5, 11, 4}};
  for (const auto& e : exps) {
    const MultCharacter A = character(ctx, e[0]), B = character(ctx, e[1]),
                        C = character(ctx, e[2]);
    const MultCharacter D = A * B * C.inverse();
    for (std::uint32_t x = 2; x < 13; ++x)
      CHECK(std::abs(hg_2f1(A, B, C, x) -
                     A(-1) * hg_2f1(A, B, D, 1 - static_cast<std::int64_t>(x))) <
            identity_tolerance(13));
  }
}

TEST_CASE("hg_general validates its argument shape") {
  const FpContext ctx = make_context(13);
  const GaussTable table = build_gauss_table(ctx);
  expect_error(ErrorCode::bad_argument, [&] {
    const HgSpec bad{{trivial_char(ctx)}, {}, 2};  // n = 0
    hg_general(table, bad);
  });
  expect_error(ErrorCode::bad_argument, [&] {
    const HgSpec bad{{trivial_char(ctx), trivial_char(ctx)}, {trivial_char(ctx), trivial_char(ctx)}, 2};
    hg_general(table, bad);
  });
}

TEST_CASE("trace identity at p = 13, t = 2 with the frozen point count") {
  const FpContext ctx = make_context(13);
  // y^2 = 4x^3 + x + 1 over F_13 has 16 points, trace -2
  CHECK(trace_family(ctx, CurveFamily::t1728, 2) == -2);
  const Complex lhs = 13.0 * hg_t1728(ctx, 2);
  const Complex rhs = psi_t1728(ctx, 2) * -2.0;
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("trace identity sweeps cleanly at p = 37") {
  const FpContext ctx = make_context(37);
  for (std::uint32_t t = 2; t < 37; ++t) {
    const auto a = static_cast<double>(trace_family(ctx, CurveFamily::t1728, t));
    CHECK(std::abs(37.0 * hg_t1728(ctx, t) - psi_t1728(ctx, t) * a) < 1e-9);
  }
}

TEST_CASE("trace identity holds for each of the four order-12 characters") {
  const FpContext ctx = make_context(13);
  for (std::uint32_t u : {1u, 5u, 7u, 11u}) {
    CHECK(char_order(character(ctx, u)) == 12);
    for (std::uint32_t t = 2; t < 13; ++t) {
      const auto a = static_cast<double>(trace_family(ctx, CurveFamily::t1728, t));
      CHECK(std::abs(13.0 * hg_t1728(ctx, t, u) - psi_t1728(ctx, t, u) * a) < 1e-9);
    }
  }
}

TEST_CASE("conjugating the order-12 character conjugates the value") {
  const FpContext ctx = make_context(13);
  for (std::uint32_t t = 2; t < 13; ++t)
    CHECK(std::abs(std::conj(hg_t1728(ctx, t)) - hg_t1728(ctx, t, 11)) < 1e-12);
}

TEST_CASE("hg_t1728 rejects excluded arguments and residues") {
  const FpContext ctx = make_context(13);
  expect_error(ErrorCode::bad_argument, [&] { hg_t1728(ctx, 0); });
  expect_error(ErrorCode::bad_argument, [&] { hg_t1728(ctx, 1); });
  expect_error(ErrorCode::bad_argument, [&] { hg_t1728(ctx, 14); });  // 14 = 1 mod 13
  expect_error(ErrorCode::bad_argument, [&] { hg_t1728(ctx, 2, 2); });
  const FpContext ctx17 = make_context(17);
  expect_error(ErrorCode::bad_residue, [&] { hg_t1728(ctx17, 2); });
  expect_error(ErrorCode::bad_residue, [&] { psi_t1728(ctx17, 2); });
}

TEST_CASE("Gauss-sum forms match the direct evaluations") {
  const FpContext ctx = make_context(13);
  const GaussTable table = build_gauss_table(ctx);
  for (std::uint32_t t = 2; t < 13; ++t) {
    const auto a = static_cast<double>(trace_family(ctx, CurveFamily::t1728, t));
    CHECK(std::abs(trace_t1728_gauss_form(table, t) - a) < identity_tolerance(13));
    CHECK(std::abs(hg_t1728_gauss_form(table, t) - hg_t1728(ctx, t)) < identity_tolerance(13));
  }
}

TEST_CASE("3F2 identity on the twisted family at p = 13, t = 3") {
  const FpContext ctx = make_context(13);
  const GaussTable table = build_gauss_table(ctx);
  const MultCharacter phi = quadratic_char(ctx);
  const MultCharacter eps = trivial_char(ctx);
  const std::uint32_t arg = ctx.reduce(1 + static_cast<std::int64_t>(ctx.inv(3)));
  const HgSpec spec{{phi, phi, phi}, {eps, eps}, arg};
  const Complex F = hg_general(table, spec);
  const auto a32 = static_cast<double>(trace_family(ctx, CurveFamily::twisted, 3));
  const double rhs_sign = ctx.legendre(-3);
  CHECK(std::abs(169.0 * F - rhs_sign * (a32 * a32 - 13.0)) < 1e-9);
}

TEST_CASE("2F1 identity on the Legendre family at p = 13, t = 2") {
  const FpContext ctx = make_context(13);
  const MultCharacter phi = quadratic_char(ctx);
  const Complex F = hg_2f1(phi, phi, trivial_char(ctx), 2);
  const auto a21 = static_cast<double>(trace_family(ctx, CurveFamily::legendre, 2));
  CHECK(std::abs(13.0 * F + static_cast<double>(ctx.legendre(-1)) * a21) < 1e-9);
}
