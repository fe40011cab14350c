#include <doctest.h>

#include "pillow/verifier.hpp"

using namespace pillow;

namespace {

Slope S(const char* s) { return Slope::parse(s); }

}  // namespace

TEST_CASE("claim names round trip") {
  for (Claim c : kAllClaims) CHECK(parse_claim(claim_name(c)) == c);
  CHECK_THROWS_AS(parse_claim("bogus"), std::invalid_argument);
}

TEST_CASE("check_claim examples") {
  const ClaimResult prefix = check_claim(Claim::prefix, S("3/8"));
  CHECK(prefix.pass);
  CHECK(prefix.evidence == "w2(k=1)=bz'xb'zb'y");

  CHECK(check_claim(Claim::obstruction, S("3/2")).pass);
  CHECK(check_claim(Claim::obstruction, S("5/8")).pass);
  CHECK(check_claim(Claim::obstruction, S("3/8")).pass);
  CHECK(check_claim(Claim::special_word, Slope::infinity()).pass);
  CHECK(check_claim(Claim::special_word, S("5/6")).pass);
  CHECK(check_claim(Claim::cancellation, S("5/22")).pass);
  CHECK(check_claim(Claim::surgery, S("1/4")).pass);
  CHECK(check_claim(Claim::structure, S("7/4")).pass);
  CHECK(check_claim(Claim::classification, S("5/18")).pass);

  CHECK_THROWS_AS(check_claim(Claim::prefix, S("1/4")), ClaimNotApplicable);
  CHECK_THROWS_AS(check_claim(Claim::surgery, S("3/8")), ClaimNotApplicable);
  CHECK_THROWS_AS(check_claim(Claim::obstruction, S("1/4")), ClaimNotApplicable);
  CHECK_THROWS_AS(check_claim(Claim::structure, Slope::infinity()), ClaimNotApplicable);
  CHECK_THROWS_AS(check_claim(Claim::special_word, S("3/8")), ClaimNotApplicable);
}

TEST_CASE("oracle claim") {
  const ClaimResult half = check_claim(Claim::oracle, S("1/2"), 4);
  CHECK(half.pass);
  CHECK(half.evidence.rfind("partner ", 0) == 0);
  const ClaimResult general = check_claim(Claim::oracle, S("3/8"), 4);
  CHECK(general.pass);
  CHECK(general.evidence == "none within bound 4");
  // Too small a bound to see the partner is a failure, not a pass.
  CHECK_FALSE(check_claim(Claim::oracle, S("1/2"), 1).pass);
}

TEST_CASE("record fields follow the class") {
  const SlopeRecord g = evaluate_slope(S("3/8"), 2, false);
  CHECK(g.slope_class == "General case=a subcase=2 k=1");
  CHECK(g.beta_word == "bz'xb'zb'yz'b");
  CHECK(g.prefix_ok == true);
  CHECK(g.obstruction == false);
  REQUIRE(g.cancellation);
  CHECK(*g.cancellation == CancellationRecord{1, false, 1});
  CHECK_FALSE(g.surgered_word);
  CHECK_FALSE(g.oracle);
  CHECK_FALSE(g.claims.contains("oracle"));

  const SlopeRecord r = evaluate_slope(S("1/2"), 3, true);
  CHECK_FALSE(r.prefix_ok);
  CHECK_FALSE(r.obstruction);
  CHECK_FALSE(r.cancellation);
  REQUIRE(r.surgered_word);
  REQUIRE(r.oracle);
  CHECK(r.oracle->partner_found);
  CHECK(r.oracle->expected);
  CHECK(r.oracle->bound == 3);

  const SlopeRecord h = evaluate_slope(S("5/8"), 2, false);
  CHECK(h.obstruction == true);
  CHECK(h.claims.at("special_word"));
}

TEST_CASE("small sweep") {
  const VerificationReport r = sweep(8, 3, {S("3/8")}, 2);
  CHECK(r.parameters.q_max == 8);
  CHECK(r.records.size() == admissible_slopes(8).size());
  CHECK(std::is_sorted(r.records.begin(), r.records.end(),
                       [](const SlopeRecord& a, const SlopeRecord& b) { return a.slope < b.slope; }));
  CHECK(r.all_pass());
  CHECK(r.summary == summarize(r.records));

  int general = 0;
  for (const auto& rec : r.records) {
    if (rec.prefix_ok) {
      ++general;
      CHECK(*rec.prefix_ok);
      CHECK(rec.slope == S("3/8"));
    }
    CHECK(rec.oracle.has_value() == (rec.slope == S("3/8")));
  }
  CHECK(general == 1);
  CHECK(r.summary.claims.at("prefix").checked == 1);
  CHECK(r.summary.claims.at("oracle").checked == 1);
}

TEST_CASE("sampled slopes beyond the range are added") {
  const VerificationReport r = sweep(2, 3, {S("1/2"), S("3/8")}, 1);
  CHECK(r.all_pass());
  REQUIRE(r.records.size() == 4);
  CHECK(r.records.back().slope == S("3/8"));
  CHECK(r.records[1].oracle->partner_found);
}

TEST_CASE("sweep results do not depend on the thread count") {
  const auto one = sweep(30, 2, {S("1/2")}, 1);
  const auto four = sweep(30, 2, {S("1/2")}, 4);
  CHECK(one == four);
}

TEST_CASE("summary counts failures") {
  std::vector<SlopeRecord> recs(2);
  recs[0].slope = S("3/8");
  recs[0].claims = {{"prefix", true}, {"cancellation", false}};
  recs[1].slope = S("5/12");
  recs[1].claims = {{"prefix", false}};
  const ReportSummary s = summarize(recs);
  CHECK(s.slopes == 2);
  CHECK(s.claims.at("prefix") == ClaimTally{2, 1});
  CHECK(s.claims.at("cancellation") == ClaimTally{1, 0});
  CHECK(s.claims.at("oracle") == ClaimTally{0, 0});
  CHECK(s.failures == std::vector<std::string>{"3/8:cancellation", "5/12:prefix"});
}

TEST_CASE("sweep rejects bad parameters") {
  CHECK_THROWS_AS(sweep(7), SlopeError);
  CHECK_THROWS_AS(sweep(8, 0), std::invalid_argument);
}
