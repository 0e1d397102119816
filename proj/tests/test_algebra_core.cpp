#include <gtest/gtest.h>

#include <climits>

#include "gen.hpp"
#include "koszul/polynomial.hpp"

using namespace koszul;

TEST(Field, RationalArithmeticMatchesGmp) {
  Field Q(0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-1000, 1000);
  std::vector<long> edge{LLONG_MAX / 2, LLONG_MIN / 2, INT_MAX, INT_MIN, 1, -1, 3};
  for (int trial = 0; trial < 2000; ++trial) {
    long a = trial % 5 == 0 ? edge[trial % edge.size()] : small(rng);
    long b = trial % 7 == 0 ? edge[(trial / 7) % edge.size()] : small(rng);
    long c = small(rng);
    if (c == 0) c = 1;
    mpq_class qa(a), qb(b), qc(c);
    Coeff x = Q.div(Q.from_int(a), Q.from_int(c));
    Coeff y = Q.from_int(b);
    EXPECT_EQ(Q.add(x, y).to_mpq(), qa / qc + qb);
    EXPECT_EQ(Q.mul(x, y).to_mpq(), qa / qc * qb);
    EXPECT_EQ(Q.sub(x, y).to_mpq(), qa / qc - qb);
    if (b != 0) EXPECT_EQ(Q.div(x, y).to_mpq(), qa / qc / qb);
  }
}

TEST(Field, OverflowFallsBackToBigIntegers) {
  Field Q(0);
  Coeff x = Q.from_int(LLONG_MAX);
  Coeff y = Q.mul(x, x);
  mpq_class expect = mpq_class(mpz_class(LONG_MAX)) * mpz_class(LONG_MAX);
  EXPECT_EQ(y.to_mpq(), expect);
  Coeff back = Q.div(y, x);
  EXPECT_EQ(back.to_mpq(), mpq_class(mpz_class(LONG_MAX)));
  EXPECT_TRUE(Q.sub(back, x).is_zero());
}

TEST(Field, PrimeFieldMatchesModularOracle) {
  const std::uint32_t p = 32003;
  Field F(p);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> v(-100000, 100000);
  auto mod = [p](long a) { return ((a % long(p)) + long(p)) % long(p); };
  for (int trial = 0; trial < 2000; ++trial) {
    long a = v(rng), b = v(rng);
    EXPECT_EQ(F.add(F.from_int(a), F.from_int(b)).to_mpq(), mpq_class(mod(a + b)));
    EXPECT_EQ(F.mul(F.from_int(a), F.from_int(b)).to_mpq(), mpq_class(mod(mod(a) * mod(b))));
    if (mod(b) != 0) {
      Coeff q = F.div(F.from_int(a), F.from_int(b));
      EXPECT_EQ(F.mul(q, F.from_int(b)).to_mpq(), mpq_class(mod(a)));
    }
  }
}

TEST(Field, RejectsNonPrimeCharacteristic) {
  EXPECT_THROW(Field(4), std::invalid_argument);
  EXPECT_THROW(Field(1), std::invalid_argument);
  EXPECT_NO_THROW(Field(2));
}

TEST(Monomial, OrdersMatchTheirDefinitions) {
  // Brute-force definitions over all exponent vectors of small degree.
  const std::size_t n = 3;
  std::vector<Monomial> all;
  for (int d = 0; d <= 3; ++d)
    for (const auto& m : monomials_of_degree(n, d)) all.push_back(m);
  auto lex = [&](const Monomial& a, const Monomial& b) {
    for (std::size_t v = 0; v < n; ++v)
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    return 0;
  };
  auto grevlex = [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t v = n; v-- > 0;)
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    return 0;
  };
  auto sign = [](int x) { return (x > 0) - (x < 0); };
  TermOrder L = TermOrder::lex(n), G = TermOrder::grevlex(n);
  TermOrder W(OrderKind::Weighted, std::vector<std::size_t>{0, 1, 2}, {3, 1, 2});
  for (const auto& a : all)
    for (const auto& b : all) {
      EXPECT_EQ(sign(L.compare(a, b)), lex(a, b));
      EXPECT_EQ(sign(G.compare(a, b)), grevlex(a, b));
      int wa = 3 * a[0] + a[1] + 2 * a[2], wb = 3 * b[0] + b[1] + 2 * b[2];
      if (wa != wb) EXPECT_EQ(sign(W.compare(a, b)), wa > wb ? 1 : -1);
    }
}

TEST(Monomial, PermutedOrderReordersVariables) {
  TermOrder P(OrderKind::Lex, std::vector<std::size_t>{2, 0, 1});
  Monomial x = Monomial::variable(0), z = Monomial::variable(2);
  EXPECT_GT(P.compare(z, x), 0);
  EXPECT_LT(TermOrder::lex(3).compare(z, x), 0);
}

TEST(Monomial, LcmGcdDivision) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a = gen::monomial(rng, 4, 4), b = gen::monomial(rng, 4, 3);
    Monomial l = a.lcm(b), g = a.gcd(b);
    EXPECT_TRUE(a.divides(l));
    EXPECT_TRUE(b.divides(l));
    EXPECT_EQ(l * g, a * b);
    EXPECT_EQ((a * b).div(b), a);
    EXPECT_EQ(a.coprime(b), g.is_one());
  }
}

TEST(Polynomial, RingAxiomsHoldOnRandomElements) {
  for (std::uint32_t p : {0u, 101u}) {
    RingPtr S = make_ring(Field(p), {"x", "y", "z"});
    std::mt19937_64 rng(p + 1);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial f = gen::polynomial(rng, S, 3, 4, false), g = gen::polynomial(rng, S, 2, 3, false),
                 h = gen::polynomial(rng, S, 2, 3, false);
      EXPECT_EQ(f + g, g + f);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_TRUE((f - f).is_zero());
      EXPECT_EQ(poly_op(PolyOpKind::Add, f, g), f + g);
      EXPECT_EQ(poly_op(PolyOpKind::Scale, f, g, S->field().from_int(3)), f + f + f);
    }
  }
}

TEST(Polynomial, TermsStaySortedAndCombined) {
  RingPtr S = make_ring(Field(0), {"x", "y"});
  Polynomial f(S, {{Monomial::variable(1), S->field().from_int(2)},
                   {Monomial::variable(0), S->field().from_int(1)},
                   {Monomial::variable(1), S->field().from_int(-2)}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.to_string(), "x");
}

TEST(Polynomial, ParseRoundTrip) {
  RingPtr S = make_ring(Field(0), {"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = gen::polynomial(rng, S, 3, 5, false);
    EXPECT_EQ(parse_polynomial(f.to_string(), S), f) << f.to_string();
  }
  EXPECT_EQ(parse_polynomial("1/2 x*y - 3z^2", S).to_string(), "1/2*x*y - 3*z^2");
  EXPECT_THROW(parse_polynomial("x + w", S), ParseError);
  EXPECT_THROW(parse_polynomial("x +", S), ParseError);
}

TEST(Polynomial, HomogeneityAndIdealValidation) {
  RingPtr S = make_ring(Field(0), {"x", "y"});
  EXPECT_TRUE(parse_polynomial("x^2 - 3x*y", S).is_homogeneous());
  EXPECT_FALSE(parse_polynomial("x^2 + y^3", S).is_homogeneous());
  EXPECT_THROW(Ideal(S, {parse_polynomial("x^2 + y", S)}), std::invalid_argument);
  EXPECT_THROW(Ideal(S, {parse_polynomial("1", S)}), std::invalid_argument);
}

TEST(Polynomial, RingMismatchIsRejected) {
  RingPtr A = make_ring(Field(0), {"x", "y"});
  RingPtr B = make_ring(Field(0), {"u", "v"});
  EXPECT_THROW(Polynomial::variable(A, 0) + Polynomial::variable(B, 0), RingMismatch);
  RingPtr Alex = with_order(A, TermOrder::lex(2));
  Polynomial f = parse_polynomial("x*y + y^2", A);
  EXPECT_EQ(f.to_ring(Alex).to_ring(A), f);
}
