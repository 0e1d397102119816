#include <gtest/gtest.h>

#include "koszul/harness.hpp"
#include "koszul/invariants.hpp"

using namespace koszul;

namespace {

BettiTable table(std::map<std::pair<int, int>, std::size_t> e, int hmax, bool complete) {
  BettiTable t;
  t.entries = std::move(e);
  t.hmax = hmax;
  t.complete = complete;
  return t;
}

QuotientRing quotient(const std::vector<std::string>& vars, const std::string& gens) {
  RingPtr S = make_ring(Field(0), vars);
  return QuotientRing(Ideal(S, parse_polynomial_list(gens, S)));
}

}  // namespace

TEST(Invariants, CompleteTableIsExact) {
  // S/(x^2, xy): 1; 2 in degree 2; 1 in degree 3.
  BettiTable t = table({{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}}, 2, true);
  EXPECT_EQ(top_degree(t, 1), 2);
  EXPECT_EQ(top_degree(t, 2), 3);
  EXPECT_FALSE(top_degree(t, 3).has_value());
  TaggedInt reg = regularity(t);
  EXPECT_EQ(reg.value, 1);
  EXPECT_EQ(reg.tag, Exactness::Exact);
  TaggedRational s = slope(t);
  EXPECT_EQ(*s.value, 2);
  EXPECT_EQ(s.tag, Exactness::Exact);
  EXPECT_EQ(projective_dimension(t).value, 2);
}

TEST(Invariants, TruncatedTableIsALowerBound) {
  BettiTable t = table({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 3}, 1}}, 2, false);
  TaggedRational s = slope(t);
  EXPECT_EQ(*s.value, mpq_class(3, 2));
  EXPECT_EQ(s.tag, Exactness::LowerBoundAtCutoff);
  EXPECT_EQ(s.cutoff, 2);
  EXPECT_EQ(regularity(t).tag, Exactness::LowerBoundAtCutoff);
  TaggedInt pd = projective_dimension(t);
  EXPECT_EQ(pd.tag, Exactness::LowerBoundAtCutoff);
  EXPECT_EQ(pd.value, 2);
  EXPECT_THROW(top_degree(t, 3), std::out_of_range);
  EXPECT_NE(s.to_string().find("lower-bound-at-cutoff"), std::string::npos);
}

TEST(Invariants, RateFromResidueFieldTable) {
  // K[x]/(x^3): t_2 = 3 gives the largest term (t_i - 1)/(i - 1) = 2.
  QuotientRing R = quotient({"x"}, "x^3");
  RateReport r = rate_of_algebra(R, 5);
  ASSERT_TRUE(r.rate.value.has_value());
  EXPECT_EQ(*r.rate.value, 2);
  EXPECT_EQ(r.rate.tag, Exactness::LowerBoundAtCutoff);
  ASSERT_FALSE(r.terms.empty());
  EXPECT_EQ(r.terms.front().first, 2);
  EXPECT_EQ(r.terms.front().second, 2);
}

TEST(Invariants, RateOfPolynomialRingIsUndefinedButExact) {
  RingPtr S = make_ring(Field(0), {"x", "y"});
  RateReport r = rate_of_algebra(QuotientRing(S), 4);
  EXPECT_TRUE(r.k_table.complete);
  EXPECT_EQ(r.rate.tag, Exactness::Exact);
  EXPECT_EQ(*r.rate.value, 1);
}

TEST(Invariants, RateViaAugmentationAgrees) {
  for (const std::string gens : {"x^2, y^2", "x^2, x*y", "x^3, y^2"}) {
    QuotientRing R = quotient({"x", "y"}, gens);
    RateReport a = rate_of_algebra(R, 5);
    TaggedRational b = rate_via_augmentation(R, 5);
    ASSERT_TRUE(a.rate.value && b.value) << gens;
    EXPECT_EQ(*a.rate.value, *b.value) << gens;
  }
}

TEST(Invariants, KoszulProbeVerdicts) {
  Verdict koszul = koszul_probe(quotient({"x", "y"}, "x^2, x*y"), 4);
  EXPECT_EQ(koszul.status, Status::VerifiedAtCutoff);
  Verdict cubic = koszul_probe(quotient({"x"}, "x^3"), 4);
  EXPECT_EQ(cubic.status, Status::Refuted);
  ASSERT_TRUE(cubic.witness.has_value());
  EXPECT_EQ(cubic.witness->i, 2);
  EXPECT_EQ(cubic.witness->j, 3);
}

TEST(Invariants, ReportJsonCarriesTags) {
  QuotientRing R = quotient({"x", "y"}, "x^2, y^2");
  InvariantReport rep = invariant_report(BettiTable::from_resolution(resolve_over_ambient(R)));
  nlohmann::json j = rep.to_json();
  EXPECT_EQ(j["reg"]["value"], 2);
  EXPECT_EQ(j["reg"]["tag"], "exact");
  EXPECT_EQ(rep.slope.value, mpq_class(2));
  EXPECT_NE(rep.to_text().find("reg"), std::string::npos);
}

TEST(Invariants, StatusCombineTakesTheWeaker) {
  EXPECT_EQ(combine(Status::Verified, Status::VerifiedAtCutoff), Status::VerifiedAtCutoff);
  EXPECT_EQ(combine(Status::Inconclusive, Status::Refuted), Status::Refuted);
  EXPECT_EQ(combine(Status::Verified, Status::Verified), Status::Verified);
}
