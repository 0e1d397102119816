#include <gtest/gtest.h>

#include <set>

#include "koszul/harness.hpp"
#include "koszul/series.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

Ideal ideal(const std::vector<std::string>& vars, const std::string& gens) {
  RingPtr S = make_ring(Field(0), vars);
  return Ideal(S, parse_polynomial_list(gens, S));
}

std::map<std::string, Status> by_check(const std::vector<Verdict>& vs) {
  std::map<std::string, Status> m;
  for (const auto& v : vs) m[v.check] = v.status;
  return m;
}

}  // namespace

TEST(Harness, RoosAlgebraShape) {
  RingPtr S = roos_ring();
  Ideal two = roos_algebra(S, 2), three = roos_algebra(S, 3);
  EXPECT_EQ(two.size(), 13u);
  EXPECT_EQ(three.size(), 13u);
  EXPECT_EQ(two.generators().back().to_string(), "x1*x4 + x3*x6");
  EXPECT_EQ(three.generators().back().to_string(), "x1*x4 + x3*x6 + x4*x6");
  EXPECT_EQ(two.generators()[11].to_string(), "x1*x3 + 2*x3*x6 - x4*x6");
  for (const Ideal& I : {two, three})
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(oracle::quotient_dim(I, d), std::vector<std::size_t>({1, 6, 8, 0, 0})[d]);
  EXPECT_THROW(roos_algebra(S, 1), std::invalid_argument);
  EXPECT_THROW(roos_algebra(make_ring(Field(0), {"x"}), 2), std::invalid_argument);
}

TEST(Harness, DeltaOfMonomialIdealIsItsTopDegree) {
  for (const Ideal& I : random_monomial_ideals(10, 3)) {
    // Top degree among minimal generators.
    int top = 0;
    for (const auto& g : I.generators()) {
      bool minimal = true;
      for (const auto& h : I.generators())
        if (h.lead().mono != g.lead().mono && h.lead().mono.divides(g.lead().mono)) minimal = false;
      if (minimal) top = std::max(top, g.degree());
    }
    DeltaBudget b;
    b.max_permutations = 6;
    b.random_weight_samples = 2;
    EXPECT_EQ(delta_upper_bound(I, b).value, top) << I.to_string();
  }
}

TEST(Harness, DeltaFindsQuadraticBases) {
  DeltaResult cubic = delta_upper_bound(ideal({"x", "y", "z", "w"}, "x*z - y^2, y*w - z^2, x*w - y*z"));
  EXPECT_TRUE(cubic.g_quadratic());
  EXPECT_EQ(cubic.orders_tried, 16u);
  DeltaResult roos = delta_upper_bound(roos_algebra(roos_ring(), 2));
  EXPECT_EQ(roos.value, 3);
  EXPECT_EQ(roos.orders_tried, 720u + 8u);
  DeltaBudget empty{0, 0, 1};
  EXPECT_THROW(delta_upper_bound(ideal({"x"}, "x^2"), empty), std::invalid_argument);
}

TEST(Harness, DeltaIsDeterministicForASeed) {
  Ideal I = ideal({"x", "y", "z"}, "x^2 + y*z, x*y + z^2, y^3");
  DeltaBudget b{2, 6, 42};
  DeltaResult a = delta_upper_bound(I, b), c = delta_upper_bound(I, b);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.order.describe(), c.order.describe());
}

TEST(Harness, CertifiedRateOfRoosAlgebra) {
  RateCertificate rc = certified_rate(QuotientRing(roos_algebra(roos_ring(), 2)), 4);
  ASSERT_TRUE(rc.rate.value.has_value());
  EXPECT_GE(*rc.rate.value, mpq_class(3, 2));
  for (const auto& [i, q] : rc.terms) EXPECT_LE(q, 2) << i;
  ASSERT_TRUE(rc.delta.has_value());
  EXPECT_EQ(rc.upper(), 2);
}

TEST(Harness, CertifiedRateIsExactForGQuadraticRings) {
  RateCertificate rc = certified_rate(QuotientRing(ideal({"x", "y"}, "x^2, x*y")), 3);
  EXPECT_TRUE(rc.exact());
  EXPECT_EQ(*rc.rate.value, 1);
}

TEST(Harness, MainTheoremOnCompleteIntersectionAndMonomialIdeal) {
  auto ci = by_check(check_main_theorem(make_instance("ci", ideal({"x", "y"}, "x^2, y^2"))));
  auto mono = by_check(check_main_theorem(make_instance("mono", ideal({"x", "y"}, "x^2, x*y"))));
  for (const auto& m : {ci, mono}) {
    ASSERT_EQ(m.size(), 4u);
    for (const auto& [check, s] : m) EXPECT_NE(s, Status::Refuted) << check;
    EXPECT_EQ(m.at("main-theorem-4"), Status::Verified);
  }
}

TEST(Harness, MainTheoremRejectsBadHypotheses) {
  EXPECT_THROW(check_main_theorem(make_instance("linear", ideal({"x", "y"}, "x"))), std::invalid_argument);
  RingPtr S = make_ring(Field(0), {"x", "y"});
  QuotientRing Q(Ideal(S, parse_polynomial_list("x^2", S)));
  EXPECT_THROW(check_main_theorem(make_instance("zero", Q, parse_polynomial_list("x^2", S))), std::invalid_argument);
  QuotientRing cubic(Ideal(S, parse_polynomial_list("x^3", S)));
  EXPECT_THROW(check_main_theorem(make_instance("nonkoszul", cubic, parse_polynomial_list("y^2", S))),
               std::invalid_argument);
}

TEST(Harness, ExtremalProductsForCompleteIntersection) {
  Verdict v = check_extremal(make_instance("ci", ideal({"x", "y"}, "x^2, y^2")));
  EXPECT_EQ(v.status, Status::Verified) << v.detail;
  EXPECT_NE(v.detail.find("(H1)^i rank 1/1"), std::string::npos) << v.detail;
}

TEST(Harness, CanonicalExamples) {
  Verdict koszul = check_canonical(make_instance("mono", ideal({"x", "y"}, "x^2, x*y")));
  EXPECT_EQ(koszul.status, Status::Verified) << koszul.detail;
  Verdict cubic = check_canonical(make_instance("cubic", ideal({"x", "y"}, "x^3, y^2")));
  EXPECT_NE(cubic.status, Status::Refuted) << cubic.detail;
  EXPECT_NE(cubic.detail.find("inequality branch"), std::string::npos);
}

TEST(Harness, TaylorBoundsOnRandomIdeals) {
  for (const Ideal& I : random_monomial_ideals(12, 9)) {
    Verdict v = check_taylor_bounds(I);
    EXPECT_EQ(v.status, Status::Verified) << I.to_string() << " " << v.detail;
  }
  EXPECT_THROW(check_taylor_bounds(ideal({"x", "y"}, "x^2 + y^2")), std::invalid_argument);
}

TEST(Harness, RandomMonomialIdealsAreSeeded) {
  auto a = random_monomial_ideals(5, 77), b = random_monomial_ideals(5, 77), c = random_monomial_ideals(5, 78);
  auto strings = [](const std::vector<Ideal>& v) {
    std::vector<std::string> s;
    for (const auto& I : v) s.push_back(I.to_string());
    return s;
  };
  EXPECT_EQ(strings(a), strings(b));
  EXPECT_NE(strings(a), strings(c));
}

TEST(Harness, RoosChecks) {
  CheckOptions o;
  o.hmax = 4;
  auto m = by_check(check_roos(2, o));
  for (const char* c : {"roos-hilbert", "roos-poincare", "roos-slope", "roos-rate"}) {
    ASSERT_TRUE(m.count(c)) << c;
    EXPECT_NE(m.at(c), Status::Refuted) << c;
  }
  EXPECT_EQ(m.at("roos-hilbert"), Status::Verified);
}

TEST(Harness, RunFamilyReportsConfigurationErrors) {
  HarnessReport r = run_family("main", ideal({"x", "y"}, "x"));
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].status, Status::Inconclusive);
  EXPECT_NE(r.verdicts[0].detail.find("configuration error"), std::string::npos);
  EXPECT_THROW(run_family("nonsense", ideal({"x"}, "x^2")), std::invalid_argument);
}

TEST(Harness, RunFamilyReportsBudgetExhaustion) {
  CheckOptions o;
  o.hmax = 6;
  o.resolution.generator_budget = 20;
  HarnessReport r = run_family("main", roos_algebra(roos_ring(), 3), o);
  ASSERT_FALSE(r.verdicts.empty());
  EXPECT_EQ(r.verdicts[0].status, Status::Inconclusive);
  EXPECT_EQ(r.verdicts[0].limited_side, "budget");
}

TEST(Harness, RunAllChecksIsDeterministicAndCoversEveryFamily) {
  HarnessReport a = run_all_checks({}, true);
  HarnessReport b = run_all_checks({}, false);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_FALSE(a.any_refuted());
  std::set<std::string> verified;
  for (const auto& v : a.verdicts)
    if (v.status == Status::Verified) verified.insert(family_of(v.check));
  for (const auto& f : theorem_families()) EXPECT_TRUE(verified.count(f)) << f;
  EXPECT_EQ(a.seconds.size(), a.verdicts.size());
  EXPECT_FALSE(a.to_json(false).contains("seconds"));
}

TEST(Harness, FamilyOfMapsCheckNames) {
  EXPECT_EQ(family_of("main-theorem-3"), "main");
  EXPECT_EQ(family_of("slope-descent"), "descent");
  EXPECT_EQ(family_of("groebner-taylor"), "groebner");
  EXPECT_EQ(family_of("roos-rate"), "roos");
  EXPECT_EQ(family_of("taylor"), "taylor");
}
