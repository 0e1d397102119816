#include <gtest/gtest.h>

#include "gen.hpp"
#include "koszul/betti.hpp"
#include "koszul/harness.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

using Table = std::map<std::pair<int, int>, std::size_t>;

Ideal ideal(const std::vector<std::string>& vars, const std::string& gens, std::uint32_t p = 0) {
  RingPtr S = make_ring(Field(p), vars);
  return Ideal(S, parse_polynomial_list(gens, S));
}

std::vector<Ideal> random_ideals(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Ideal> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t n = 2 + rng() % 2;
    RingPtr S = make_ring(Field(rng() % 2 ? 0 : 101), indexed_names(n));
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2 + static_cast<int>(rng() % 2); ++g) {
      Polynomial f = gen::polynomial(rng, S, 2 + static_cast<int>(rng() % 2), 1 + rng() % 3, true, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (!gens.empty()) out.emplace_back(S, gens);
  }
  return out;
}

void expect_complex(const Resolution& res) {
  const QuotientRing* over = res.ring && !res.ring->is_polynomial_ring() ? res.ring.get() : nullptr;
  for (std::size_t k = 0; k + 1 < res.differentials.size(); ++k)
    EXPECT_TRUE(matrix_compose(res.differentials[k], res.differentials[k + 1], over).is_zero()) << "at " << k;
}

std::string matrix_key(const GradedMatrix& m) {
  std::string s;
  for (int t : m.source().twists) s += std::to_string(t) + ",";
  return s + "|" + m.to_string();
}

}  // namespace

TEST(Resolution, AmbientBettiMatchesKoszulComplexOracle) {
  std::vector<Ideal> ideals;
  for (const auto& e : builtin_corpus())
    if (e.ideal.ring()->nvars() <= 4 && !e.ideal.empty()) ideals.push_back(e.ideal);
  for (const auto& I : random_ideals(41, 10)) ideals.push_back(I);
  ASSERT_GE(ideals.size(), 15u);
  for (const Ideal& I : ideals) {
    QuotientRing R(I);
    Resolution res = resolve_over_ambient(R);
    expect_complex(res);
    for (const auto& d : res.differentials) EXPECT_TRUE(d.is_minimal());
    BettiTable t = BettiTable::from_resolution(res);
    EXPECT_TRUE(t.complete);
    int maxj = 0;
    for (const auto& [key, n] : t.entries) maxj = std::max(maxj, key.second);
    Table oracle = oracle::koszul_betti(R, maxj + 2);
    EXPECT_EQ(t.entries, oracle) << I.to_string();
  }
}

TEST(Resolution, KoszulHomologyRanksMatchBetti) {
  for (const std::string gens : {"x^2, y^2", "x^2, x*y", "x*y - z^2", "x^2, x*y, y*z"}) {
    QuotientRing R(ideal({"x", "y", "z"}, gens));
    BettiTable t = BettiTable::from_resolution(resolve_over_ambient(R));
    for (int i = 0; i <= 3; ++i)
      for (int j = i; j <= i + 3; ++j) EXPECT_EQ(KoszulStrand(R, i, j).rank(), t.at(i, j)) << gens << " " << i << "," << j;
  }
}

TEST(Resolution, ResidueFieldOverCompleteIntersection) {
  // P(s,t) = (1 + st)^n / (1 - s^2 t^2)^c for c quadratic monomials in n variables.
  const int hmax = 5;
  for (auto [n, c] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 1}}) {
    std::vector<std::string> vars = indexed_names(n);
    std::string gens;
    for (int v = 0; v < c; ++v) gens += (v ? ", " : "") + vars[v] + "^2";
    QuotientRing R(ideal(vars, gens));
    ResolutionOptions o;
    o.hmax = hmax;
    Resolution res = quotient_resolution(ModuleKind::ResidueField, R, o);
    expect_complex(res);
    oracle::Series num(hmax + 1), den(hmax + 1);
    num[0][0] = 1;
    den[0][0] = 1;
    oracle::Series lin(hmax + 1), quad(hmax + 1);
    lin[0][0] = 1;
    lin[1][1] = 1;
    quad[0][0] = 1;
    quad[2][2] = -1;
    for (int k = 0; k < n; ++k) num = oracle::series_mul(num, lin, hmax);
    for (int k = 0; k < c; ++k) den = oracle::series_mul(den, quad, hmax);
    oracle::Series expect = oracle::series_mul(num, oracle::series_inverse(den, hmax), hmax);
    EXPECT_EQ(oracle::series_of(BettiTable::from_resolution(res).entries, hmax), expect) << gens;
  }
}

TEST(Resolution, ResidueFieldOverTruncatedCubic) {
  QuotientRing R(ideal({"x"}, "x^3"));
  ResolutionOptions o;
  o.hmax = 6;
  BettiTable t = BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, o));
  for (int i = 0; i <= 6; ++i) {
    int j = i % 2 == 0 ? 3 * i / 2 : 3 * (i - 1) / 2 + 1;
    EXPECT_EQ(t.at(i, j), 1u) << i;
    EXPECT_EQ(t.total(i), 1u) << i;
  }
}

TEST(Resolution, ResidueFieldOverKoszulAlgebras) {
  // For a Koszul algebra P(s,t) = 1 / H(-st).
  const int hmax = 5;
  for (const auto& [vars, gens] : std::vector<std::pair<std::vector<std::string>, std::string>>{
           {{"x", "y"}, "x^2, x*y"}, {{"x", "y", "z"}, "x^2, x*y, y*z"}, {{"x", "y", "z"}, "x*y - z^2"},
           {{"x", "y", "z"}, "x^2 - y*z, y^2 - x*z, z^2 - x*y"}}) {
    QuotientRing R(ideal(vars, gens));
    std::vector<long> h;
    for (int d = 0; d <= hmax; ++d) h.push_back(static_cast<long>(R.standard_monomials(d).size()));
    ResolutionOptions o;
    o.hmax = hmax;
    BettiTable t = BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, o));
    EXPECT_EQ(oracle::series_of(t.entries, hmax), oracle::koszul_dual(h, hmax)) << gens;
  }
}

TEST(Resolution, SerialAndParallelStrandsAgree) {
  for (const std::string gens : {"x^2, y^2, z^2", "x^2, x*y, y*z, z^2", "x*y - z^2, x^2"}) {
    QuotientRing R(ideal({"x", "y", "z"}, gens));
    std::vector<Polynomial> vars;
    for (std::size_t v = 0; v < 3; ++v) vars.push_back(Polynomial::variable(R.ambient(), v));
    GradedMatrix m = GradedMatrix::row(R.ambient(), vars);
    for (int step = 0; step < 3; ++step) {
      StrandRing a(R), b(R), c(R);
      GradedMatrix par = strand_syzygies(m, a, m.source().max_twist() + 3, Execution::Parallel);
      GradedMatrix ser = strand_syzygies(m, b, m.source().max_twist() + 3, Execution::Serial);
      GradedMatrix ref = strand_syzygies_serial(m, c, m.source().max_twist() + 3);
      EXPECT_EQ(matrix_key(par), matrix_key(ref)) << gens;
      EXPECT_EQ(matrix_key(ser), matrix_key(ref)) << gens;
      m = ref;
    }
  }
}

TEST(Resolution, ParallelAndSerialResolutionsAgree) {
  QuotientRing R(roos_algebra(roos_ring(), 2));
  ResolutionOptions par, ser;
  par.hmax = ser.hmax = 3;
  ser.exec = Execution::Serial;
  Resolution a = quotient_resolution(ModuleKind::ResidueField, R, par);
  Resolution b = quotient_resolution(ModuleKind::ResidueField, R, ser);
  ASSERT_EQ(a.differentials.size(), b.differentials.size());
  for (std::size_t k = 0; k < a.differentials.size(); ++k)
    EXPECT_EQ(matrix_key(a.differentials[k]), matrix_key(b.differentials[k]));
}

TEST(Resolution, BudgetAndDegreeGuard) {
  QuotientRing R(roos_algebra(roos_ring(), 3));
  ResolutionOptions o;
  o.hmax = 6;
  o.generator_budget = 50;
  EXPECT_THROW(quotient_resolution(ModuleKind::ResidueField, R, o), BudgetExceeded);
  ResolutionOptions g;
  g.degree_guard = 1;
  EXPECT_THROW(resolve_over_ambient(QuotientRing(ideal({"x", "y"}, "x^2, y^2")), g), BudgetExceeded);
}

TEST(Resolution, TaylorComplexRanksAndBounds) {
  for (const Ideal& I : random_monomial_ideals(8, 5)) {
    Resolution tay = taylor_complex(I);
    expect_complex(tay);
    const std::size_t g = I.size();
    for (int i = 0; i <= static_cast<int>(g); ++i) EXPECT_EQ(tay.free_module(i).rank(), oracle::binomial(g, i));
    Table t;
    for (int i = 0; i <= static_cast<int>(g); ++i)
      for (int j : tay.free_module(i).twists) ++t[{i, j}];
    BettiTable m = BettiTable::from_resolution(resolve_over_ambient(QuotientRing(I)));
    for (const auto& [key, n] : m.entries) EXPECT_LE(n, t[key]) << I.to_string();
  }
}

TEST(Resolution, TaylorIsMinimalForCompleteIntersections) {
  Ideal I = ideal({"x", "y", "z"}, "x^2, y^3, z");
  EXPECT_EQ(BettiTable::from_resolution(taylor_complex(I)).entries,
            BettiTable::from_resolution(resolve_over_ambient(QuotientRing(I))).entries);
}

TEST(Resolution, ComparisonFromPolynomialRingIsInjective) {
  // Tor^S(k,k) is an exterior algebra that injects into Tor^R(k,k) when the
  // ideal lies in the square of the maximal ideal.
  for (const std::string gens : {"x^2, y^2", "x^2, x*y, y*z", "x*y - z^2"}) {
    Ideal I = ideal({"x", "y", "z"}, gens);
    QuotientRing Q(I.ring()), R(I);
    ResolutionOptions o;
    o.hmax = 4;
    auto ranks = lift_comparison(quotient_resolution(ModuleKind::ResidueField, Q, o),
                                 quotient_resolution(ModuleKind::ResidueField, R, o));
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(ranks[std::make_pair(i, i)], oracle::binomial(3, i)) << gens;
  }
}

TEST(Resolution, ComparisonBetweenCompleteIntersections) {
  Ideal IQ = ideal({"x", "y"}, "x^2");
  Ideal IR(IQ.ring(), parse_polynomial_list("x^2, y^2", IQ.ring()));
  ResolutionOptions o;
  o.hmax = 4;
  auto ranks = lift_comparison(quotient_resolution(ModuleKind::ResidueField, QuotientRing(IQ), o),
                               quotient_resolution(ModuleKind::ResidueField, QuotientRing(IR), o));
  BettiTable kq = BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, QuotientRing(IQ), o));
  // Both rings are complete intersections of quadrics, so Tor^Q injects.
  for (const auto& [key, n] : kq.entries) EXPECT_EQ(ranks[key], n);
}

TEST(Resolution, KoszulHomologyProductOfCompleteIntersection) {
  QuotientRing R(ideal({"x", "y"}, "x^2, y^2"));
  auto h1 = koszul_homology(R, 1, 2);
  ASSERT_EQ(h1.size(), 2u);
  auto prod = homology_product(h1[0], h1[1], R);
  ASSERT_TRUE(prod.has_value());
  EXPECT_EQ(prod->i, 2);
  EXPECT_EQ(prod->j, 4);
  EXPECT_FALSE(homology_product(h1[0], h1[0], R).has_value());
}
