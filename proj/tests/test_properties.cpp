#include <gtest/gtest.h>

#include "gen.hpp"
#include "koszul/betti.hpp"
#include "koszul/harness.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

std::vector<Ideal> quadratic_algebras(std::uint64_t seed, int count, std::uint32_t p = 0) {
  std::mt19937_64 rng(seed);
  std::vector<Ideal> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t n = 3 + rng() % 2;
    RingPtr S = make_ring(Field(p), indexed_names(n));
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2 + static_cast<int>(rng() % 3); ++g) {
      Polynomial f = gen::polynomial(rng, S, 2, 1 + rng() % 3, true, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (!gens.empty()) out.emplace_back(S, gens);
  }
  return out;
}

/// Coefficients of (1-s)^n * sum_d dim (S/I)_d s^d up to degree `top`.
std::vector<mpz_class> numerator_by_linear_algebra(const Ideal& I, int top) {
  const int n = static_cast<int>(I.ring()->nvars());
  std::vector<mpz_class> h(top + 1), out(top + 1, 0);
  for (int d = 0; d <= top; ++d) h[d] = static_cast<unsigned long>(oracle::quotient_dim(I, d));
  for (int d = 0; d <= top; ++d)
    for (int k = 0; k <= std::min(d, n); ++k)
      out[d] += (k % 2 ? -1 : 1) * mpz_class(static_cast<unsigned long>(oracle::binomial(n, k))) * h[d - k];
  return out;
}

}  // namespace

TEST(Properties, EulerCharacteristicOfAmbientResolution) {
  for (const Ideal& I : quadratic_algebras(101, 15)) {
    BettiTable t = BettiTable::from_resolution(resolve_over_ambient(QuotientRing(I)));
    int top = 0;
    for (const auto& [key, n] : t.entries) top = std::max(top, key.second);
    std::vector<mpz_class> alt(top + 3, 0);
    for (const auto& [key, n] : t.entries) alt[key.second] += (key.first % 2 ? -1 : 1) * static_cast<long>(n);
    EXPECT_EQ(alt, numerator_by_linear_algebra(I, top + 2)) << I.to_string();
  }
}

TEST(Properties, ResidueFieldResolutionInvertsHilbertSeries) {
  // sum_i (-1)^i P_i(s) * H_R(s) = 1 through s^hmax.
  const int hmax = 4;
  for (const Ideal& I : quadratic_algebras(103, 12)) {
    QuotientRing R(I);
    ResolutionOptions o;
    o.hmax = hmax;
    Resolution res = quotient_resolution(ModuleKind::ResidueField, R, o);
    for (std::size_t k = 0; k + 1 < res.differentials.size(); ++k)
      EXPECT_TRUE(matrix_compose(res.differentials[k], res.differentials[k + 1], &R).is_zero());
    BettiTable t = BettiTable::from_resolution(res);
    std::vector<mpz_class> p(hmax + 1, 0), prod(hmax + 1, 0);
    for (const auto& [key, n] : t.entries)
      if (key.second <= hmax) p[key.second] += (key.first % 2 ? -1 : 1) * static_cast<long>(n);
    for (int a = 0; a <= hmax; ++a)
      for (int b = 0; a + b <= hmax; ++b)
        prod[a + b] += p[a] * static_cast<unsigned long>(oracle::quotient_dim(I, b));
    std::vector<mpz_class> one(hmax + 1, 0);
    one[0] = 1;
    EXPECT_EQ(prod, one) << I.to_string();
  }
}

TEST(Properties, SlopeAndRegularityBounds) {
  // reg >= t_1 - 1 and slope >= t_1 for an ideal with generators in degree t_1.
  for (const Ideal& I : quadratic_algebras(107, 15)) {
    BettiTable t = BettiTable::from_resolution(resolve_over_ambient(QuotientRing(I)));
    auto t1 = top_degree(t, 1);
    if (!t1) continue;
    EXPECT_GE(*regularity(t).value, *t1 - 1);
    EXPECT_GE(*slope(t).value, *t1);
    for (int i = 1; i <= t.last_column(); ++i) EXPECT_LE(mpq_class(*top_degree(t, i)), *slope(t).value * i);
  }
}

TEST(Properties, MonomialBettiIndependentOfCharacteristic) {
  for (const Ideal& I : random_monomial_ideals(15, 109)) {
    RingPtr Sp = make_ring(Field(2), I.ring()->names());
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(Polynomial::monomial(Sp, g.lead().mono, Sp->field().one()));
    EXPECT_EQ(BettiTable::from_resolution(resolve_over_ambient(QuotientRing(I))).entries,
              BettiTable::from_resolution(resolve_over_ambient(QuotientRing(Ideal(Sp, gens)))).entries)
        << I.to_string();
  }
}

TEST(Properties, InitialIdealBettiDominates) {
  // Upper semicontinuity: beta_{i,j}(S/I) <= beta_{i,j}(S/in(I)).
  for (const Ideal& I : quadratic_algebras(113, 12)) {
    BettiTable a = BettiTable::from_resolution(resolve_over_ambient(QuotientRing(I)));
    BettiTable b =
        BettiTable::from_resolution(resolve_over_ambient(QuotientRing(initial_ideal(I, I.ring()->order()))));
    for (const auto& [key, n] : a.entries) EXPECT_LE(n, b.at(key.first, key.second)) << I.to_string();
  }
}

TEST(Properties, SerialExecutionMatchesParallel) {
  for (const Ideal& I : quadratic_algebras(127, 8)) {
    QuotientRing R(I);
    ResolutionOptions par, ser;
    par.hmax = ser.hmax = 3;
    ser.exec = Execution::Serial;
    EXPECT_EQ(BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, par)).entries,
              BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, ser)).entries);
  }
}
