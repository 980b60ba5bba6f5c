#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "frobtrace/verify.hpp"
#include "test_util.hpp"

using namespace frobtrace;

TEST_CASE("target names round-trip") {
  for (VerifyTarget t :
       {VerifyTarget::thm1, VerifyTarget::thm2, VerifyTarget::recursion, VerifyTarget::props,
        VerifyTarget::koike_ono, VerifyTarget::schoof, VerifyTarget::lemmas,
        VerifyTarget::hasse_davenport, VerifyTarget::power_sums, VerifyTarget::all})
    CHECK(parse_target(target_name(t)) == t);
  CHECK(!parse_target("bogus").has_value());
}

TEST_CASE("sweep prime selection per target") {
  const auto odd = target_primes(VerifyTarget::koike_ono, 40);
  CHECK(odd == std::vector<std::uint32_t>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
  const auto mod12 = target_primes(VerifyTarget::thm1, 100);
  CHECK(mod12 == std::vector<std::uint32_t>{13, 37, 61, 73, 97});
  // the enumeration-backed targets stay inside the oracle bound
  const auto capped = target_primes(VerifyTarget::schoof, 5000);
  CHECK(capped.back() <= 200);
}

// The full run exercises every public operation: context/character/table
// construction and evaluation (all targets), gauss_sum/theta/binomials and the
// hypergeometric evaluators (hasse-davenport, thm1, koike-ono), point counting
// and family traces (thm1, koike-ono, props), class enumeration (schoof,
// lemmas), both decompositions (thm2, lemmas, power-sums), class numbers with
// H and the discriminant split (thm2 via hijikata, schoof, lemmas), G_k /
// lambda / all four trace routes (thm2, recursion), the tau formulas and
// power-sum identities (power-sums), and the q-expansion oracle (thm2).
TEST_CASE("every target passes at pmax 200 and covers its checks") {
  VerifyOptions opt;
  opt.pmax = 200;
  opt.threads = 4;

  const std::map<std::string, std::set<std::string>> expected_checks{
      {"thm1",
       {"xi-order-12", "trace-identity-xi1", "trace-identity-xi5", "trace-identity-xi7",
        "trace-identity-xi11", "conjugate-symmetry", "argument-exclusions"}},
      {"thm2",
       {"trace-vs-oracle", "zero-weights", "hijikata-vs-oracle", "hijikata-k2-balance",
        "hg-reformulation"}},
      {"recursion", {"recursion-vs-closed-form", "base-case-empty-priors"}},
      {"props",
       {"beukers-a-identity", "beukers-b-identity", "xi-cubed-sign", "trace-gauss-form",
        "hg-gauss-form"}},
      {"koike-ono", {"legendre-family-identity", "twisted-family-identity"}},
      {"schoof", {"class-count-identity", "hurwitz-consistency"}},
      {"lemmas",
       {"twist-class-counts", "quadratic-twist-pairing", "j1728-power-sums", "j0-power-sums",
        "h-vs-hstar", "frobenius-power-sum", "j-coverage"}},
      {"hasse-davenport",
       {"dlog-roundtrip", "unit-root-multiplicativity", "char-orthogonality-x",
        "char-orthogonality-n", "char-multiplicativity", "gauss-special-values",
        "gauss-magnitude", "theta-expansion", "gauss-reflection", "binomial-gauss-form",
        "hd-quadratic", "hd-cubic", "hd-general", "hg-single-sum", "hg-reflection"}},
      {"power-sums",
       {"power-sum-identities", "tau-closed-form", "tau-tenth-power", "tau-twelfth-power",
        "tenth-power-hg-cross-check"}},
  };

  const auto reports = run_verify(VerifyTarget::all, opt);
  REQUIRE(reports.size() == 9);
  for (const auto& vr : reports) {
    INFO("target " << vr.target);
    CHECK(vr.pass());
    CHECK(vr.mismatches() == 0);
    REQUIRE(!vr.primes.empty());
    const auto it = expected_checks.find(vr.target);
    REQUIRE(it != expected_checks.end());
    std::set<std::string> seen;
    for (const auto& pr : vr.primes)
      for (const auto& c : pr.checks) seen.insert(c.name);
    for (const auto& name : it->second) {
      INFO("check " << name);
      CHECK(seen.count(name) == 1);
    }
  }
}

TEST_CASE("reports serialize deterministically") {
  VerifyOptions opt;
  opt.pmax = 40;
  opt.threads = 4;
  const auto r1 = run_target(VerifyTarget::thm1, opt);
  const auto r2 = run_target(VerifyTarget::thm1, opt);
  REQUIRE(r1.primes.size() == r2.primes.size());
  CHECK(summary_json(r1) == summary_json(r2));
  for (std::size_t i = 0; i < r1.primes.size(); ++i)
    CHECK(prime_report_json(r1, r1.primes[i]) == prime_report_json(r2, r2.primes[i]));
}

TEST_CASE("single-threaded and parallel sweeps agree") {
  VerifyOptions seq;
  seq.pmax = 60;
  seq.threads = 1;
  VerifyOptions par = seq;
  par.threads = 8;
  const auto a = run_target(VerifyTarget::power_sums, seq);
  const auto b = run_target(VerifyTarget::power_sums, par);
  REQUIRE(a.primes.size() == b.primes.size());
  for (std::size_t i = 0; i < a.primes.size(); ++i)
    CHECK(prime_report_json(a, a.primes[i]) == prime_report_json(b, b.primes[i]));
}

TEST_CASE("failures are reported, not swallowed") {
  // an impossible tolerance forces residual mismatches
  VerifyOptions opt;
  opt.pmax = 13;
  opt.tolerance = 0.0;
  const auto vr = run_target(VerifyTarget::thm1, opt);
  CHECK(!vr.pass());
  CHECK(vr.mismatches() > 0);
  const auto* chk = vr.find_check("trace-identity-xi1");
  REQUIRE(chk != nullptr);
  CHECK(!chk->pass);
}
