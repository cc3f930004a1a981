#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_helpers.hpp"
#include "padic/verify.hpp"

using namespace padic;

TEST_CASE("sum-beta: f=5, e=2 passes with both sides 1 mod 27") {
  auto r = verify_sum_beta(5, 2);
  CHECK(r.pass);
  CHECK(r.modulus_exp == 3);
  CHECK(r.lhs_residue == 1);
  CHECK(r.rhs_residue == 1);
  CHECK(r.notes.find("corroborated") != std::string::npos);
}

TEST_CASE("sum-beta: f=9, e=3 gives 217 mod 3^5") {
  auto r = verify_sum_beta(9, 3);
  CHECK(r.pass);
  CHECK(r.modulus_exp == 5);
  CHECK(r.lhs_residue == 217);
}

TEST_CASE("sum-beta: f=2 needs the relaxed hypothesis") {
  auto strict = verify_sum_beta(2);
  CHECK_FALSE(strict.pass);
  CHECK(strict.notes.find("unsatisfiable") != std::string::npos);

  auto relaxed = verify_sum_beta(2, std::nullopt, true);
  CHECK(relaxed.pass);
  CHECK(relaxed.modulus_exp == 2);  // S(9)/81 = 217 = 1 mod 9, -beta*gamma = 1 mod 9
  CHECK(relaxed.lhs_residue == 1);
}

TEST_CASE("sum-beta picks the smallest admissible e when omitted") {
  auto r = verify_sum_beta(6);
  CHECK(r.pass);
  CHECK(r.params.size() == 2);
  CHECK(r.params[1].first == "e");
  CHECK(r.params[1].second == 2);
  CHECK(r.modulus_exp == 4);
  CHECK(r.lhs_residue == 55);  // 217 mod 81
}

TEST_CASE("sum-mod3 and sum-217") {
  for (long f = 1; f <= 5; ++f) CHECK(verify_sum_mod3(f).pass);
  for (long f = 2; f <= 6; ++f) {
    auto r = verify_sum_217(f);
    CHECK(r.pass);
    CHECK(r.lhs_residue == 217);
  }
  CHECK_THROWS_AS(verify_sum_217(1), std::invalid_argument);
}

TEST_CASE("sum-betagamma: proven vs observational ranges") {
  auto proven = verify_sum_betagamma(1, 7);
  CHECK(proven.pass);
  CHECK_FALSE(proven.observational);
  CHECK(proven.modulus_exp == 3);

  auto even_bonus = verify_sum_betagamma(1, 8);
  CHECK(even_bonus.pass);
  CHECK_FALSE(even_bonus.observational);
  CHECK(even_bonus.modulus_exp == 4);  // even f inside the proven range

  auto obs = verify_sum_betagamma(2, 4);
  CHECK(obs.observational);
  CHECK(obs.modulus_exp == 5);
  CHECK(obs.pass);  // the heuristic range f >= a holds here

  auto a1f9 = verify_sum_betagamma(1, 9);
  CHECK(a1f9.pass);
  CHECK_FALSE(a1f9.observational);
  CHECK(a1f9.lhs_residue == 1);  // both sides 1 mod 27

  auto a2f11 = verify_sum_betagamma(2, 11);
  CHECK(a2f11.pass);
  CHECK_FALSE(a2f11.observational);
  CHECK(a2f11.lhs_residue == 217);
}

TEST_CASE("-beta*gamma digit regression mod 3^11") {
  auto b = beta(beta_terms_for(11), 11);
  auto g = padic::gamma(11);
  CHECK((b * g).negated().residue(11) == 62668);
}

TEST_CASE("binom-prefix: p=3, f=2, e=1") {
  auto r = verify_binom_prefix(3, 2, 1);
  CHECK(r.pass);
  CHECK(r.modulus_exp == 4);
  // k = 2 instance: C(9,2) = 36 = -9/2 mod 81
  CHECK(oracle::binom(9, 2) % 81 == oracle::rational_mod(-9 + 81 * 9, 2, 3, 4));
  CHECK(r.notes.find("fails at k=4 as required") != std::string::npos);
}

TEST_CASE("binom-prefix: p=5, f=3, e=2 holds below 30 and fails at 30") {
  auto r = verify_binom_prefix(5, 3, 2);
  CHECK(r.pass);
  CHECK(r.modulus_exp == 4);
  CHECK(r.notes.find("range 0<k<30") != std::string::npos);
  CHECK(r.notes.find("fails at k=30 as required") != std::string::npos);
}

TEST_CASE("binom-prefix: p=2 variant, f=4, e=2 mod 2^7") {
  auto r = verify_binom_prefix(2, 4, 2);
  CHECK(r.pass);
  CHECK(r.modulus_exp == 7);
  // spot instance k=2: C(16,2) = 120 = -16/2 mod 128
  CHECK(oracle::binom(16, 2) % 128 == (128 - 8) % 128);
}

TEST_CASE("binom-prefix: e=f edge uses the basic range") {
  auto r = verify_binom_prefix(3, 3, 3);
  CHECK(r.pass);
  CHECK(r.modulus_exp == 2);
  CHECK(r.notes.find("range 0<k<27") != std::string::npos);
}

TEST_CASE("jacobsthal single checks") {
  auto a = verify_jacobsthal(5, 2, 1);  // C(10,5)/C(2,1) = 126 = 1 mod 125
  CHECK(a.pass);
  CHECK(a.modulus_exp == 3);
  auto b = verify_jacobsthal(3, 2, 1);  // 10 = 1 mod 9
  CHECK(b.pass);
  CHECK(b.modulus_exp == 2);
  auto c = verify_jacobsthal(7, 3, 1);  // 38760 = 1 mod 343
  CHECK(c.pass);
  CHECK(c.modulus_exp == 3);
}

TEST_CASE("jacobsthal sweep") {
  for (long p : {3L, 5L, 7L}) {
    auto r = verify_jacobsthal_sweep(p, 15);
    CHECK(r.pass);
    CHECK(r.lhs_residue == r.rhs_residue);
  }
}

TEST_CASE("val-bound sweep") {
  for (long p : {2L, 3L, 5L}) {
    auto r = verify_val_bound(p, 800);
    CHECK(r.pass);
    CHECK(r.rhs_residue == 800);
  }
}

TEST_CASE("lehmer claims") {
  auto p3 = verify_lehmer(3, 12, 40);
  CHECK(p3.pass);
  CHECK(p3.notes.find("zero sentinel") != std::string::npos);
  auto p5 = verify_lehmer(5, 8);
  CHECK(p5.pass);
  CHECK(p5.lhs_residue == p5.rhs_residue);
  auto p7 = verify_lehmer(7, 8);
  CHECK(p7.pass);
}

TEST_CASE("pow4 and identity wrappers") {
  CHECK(verify_pow4(50).pass);
  CHECK(verify_identity(30).pass);
}

TEST_CASE("reports are deterministic") {
  auto a = verify_sum_beta(5, 2);
  auto b = verify_sum_beta(5, 2);
  CHECK(format_report(a) == format_report(b));
  CHECK(a.lhs_residue == b.lhs_residue);
}

TEST_CASE("record line format is stable") {
  auto r = verify_sum_beta(5, 2);
  CHECK(format_report(r) == "CLAIM id=sum-beta params=f=5,e=2 mod=3^3 lhs=1 rhs=1 pass=true");
  auto o = verify_sum_betagamma(2, 4);
  CHECK(format_report(o) ==
        "CLAIM id=sum-betagamma params=a=2,f=4 mod=3^5 lhs=217 rhs=217 pass=true obs=true");
}

TEST_CASE("quick suite: everything passes, sorted by claim id") {
  auto reports = run_suite(SuiteLevel::quick);
  CHECK(!reports.empty());
  for (size_t i = 1; i < reports.size(); ++i)
    CHECK(reports[i - 1].claim_id <= reports[i].claim_id);
  for (const auto& r : reports) {
    INFO(format_report(r), " -- ", r.notes);
    CHECK(r.pass);
    CHECK(r.pass == (r.lhs_residue == r.rhs_residue));  // report invariant
  }
}

TEST_CASE("failed-precondition reports keep the pass <=> lhs==rhs invariant") {
  auto r = verify_sum_beta(2);
  CHECK_FALSE(r.pass);
  CHECK(r.lhs_residue != r.rhs_residue);
}
