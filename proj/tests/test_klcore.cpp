#include "klsig/hecke.hpp"
#include "klsig/klcore.hpp"

#include <gtest/gtest.h>

using namespace klsig;

namespace {

std::shared_ptr<const WeylGroup> group_of(const std::string& t) {
  return std::make_shared<const WeylGroup>(generate(build_root_system(t)));
}

Elem from_word(const WeylGroup& g, const std::vector<int>& one_based) {
  Elem x = g.identity();
  for (int s : one_based) x = g.right_mult(x, s - 1);
  return x;
}

}  // namespace

TEST(Polynomial, Basics) {
  IntPolynomial p{1, 2};
  IntPolynomial q{0, 0, 1};
  EXPECT_EQ((p * q).to_string(), "q^2 + 2q^3");
  EXPECT_EQ(p.negate_variable(), (IntPolynomial{1, -2}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.evaluate(1), 3);
  EXPECT_EQ(q.unshifted(2), IntPolynomial(BigInt(1)));
  EXPECT_THROW(p.unshifted(1), DomainError);
}

TEST(RationalFunction, Normalizes) {
  RatPolynomial t{Rational(0), Rational(1)};
  RatPolynomial one(Rational(1));
  RationalFunction f(t * t - one, t - one);
  EXPECT_EQ(f.numerator(), t + one);
  EXPECT_EQ(f.denominator(), one);
  RationalFunction g(t * Rational(-3), t * t + t);
  EXPECT_EQ(g.valuation(), 0);
  EXPECT_EQ(g.unit_sign(), -1);
  EXPECT_EQ((g / g), RationalFunction(one));
}

TEST(KL, Examples) {
  auto a2 = group_of("A2");
  KLTable t2(a2);
  for (Elem x = 0; x < a2->size(); ++x) EXPECT_EQ(t2(x, x), IntPolynomial(BigInt(1)));
  EXPECT_EQ(t2(a2->identity(), a2->long_element()), IntPolynomial(BigInt(1)));

  auto a3 = group_of("A3");
  KLTable t3(a3);
  Elem s2 = from_word(*a3, {2});
  Elem y = from_word(*a3, {2, 1, 3, 2});
  EXPECT_EQ(t3(s2, y), (IntPolynomial{1, 1}));
  EXPECT_EQ(t3.mu(s2, y), 1);
  EXPECT_EQ(t3(a3->identity(), y), (IntPolynomial{1, 1}));
}

TEST(KL, MatchesHeckeOracle) {
  for (const std::string t : {"A1", "A2", "B2", "A3", "G2"}) {
    auto g = group_of(t);
    KLTable tab(g);
    HeckeOracle oracle(*g);
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) ASSERT_EQ(tab(x, y), oracle.kl(x, y)) << t << " " << x << " " << y;
  }
}

TEST(KL, OracleCap) { EXPECT_THROW(HeckeOracle(*group_of("D4")), CapExceeded); }

TEST(KL, RuleChoicesGiveSameTable) {
  for (const std::string t : {"A2", "B2", "A3", "G2"}) {
    auto g = group_of(t);
    KLTable base(g), largest(g, {true, false}), left(g, {false, true}), both(g, {true, true});
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) {
        EXPECT_EQ(base(x, y), largest(x, y));
        EXPECT_EQ(base(x, y), left(x, y));
        EXPECT_EQ(base(x, y), both(x, y));
      }
  }
}

TEST(KL, TableInvariants) {
  for (const std::string t : {"A2", "B2", "A3", "B3", "C3"}) {
    auto g = group_of(t);
    KLTable tab(g);
    tab.fill();
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) {
        const auto& p = tab.at(x, y);
        if (!g->bruhat_leq(x, y)) {
          EXPECT_TRUE(p.is_zero());
          continue;
        }
        EXPECT_EQ(p.coefficient(0), 1);
        if (x != y) { EXPECT_LE(2 * p.degree(), g->length(y) - g->length(x) - 1); }
        for (const auto& c : p.coefficients()) EXPECT_GE(c, 0);
      }
  }
}

TEST(KL, MuCoefficients) {
  for (const std::string t : {"A2", "B2", "A3"}) {
    auto g = group_of(t);
    KLTable tab(g);
    const Elem w0 = g->long_element();
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) {
        if (!g->bruhat_leq(x, y)) { EXPECT_EQ(tab.mu(x, y), 0); }
        if (g->bruhat_less(x, y) && g->length(y) == g->length(x) + 1) { EXPECT_EQ(tab.mu(x, y), 1); }
        EXPECT_EQ(tab.mu(g->multiply(w0, x), g->multiply(w0, y)), tab.mu(y, x));
      }
  }
}

TEST(KL, JantzenLevelMultiplicity) {
  auto g = group_of("A2");
  KLTable tab(g);
  for (Elem x = 0; x < g->size(); ++x) EXPECT_EQ(jantzen_level_multiplicity(tab, x, x, 0), 1);
  EXPECT_EQ(jantzen_level_multiplicity(tab, g->long_element(), g->identity(), 3), 1);
  EXPECT_EQ(jantzen_level_multiplicity(tab, g->long_element(), g->identity(), 2), 0);
  EXPECT_EQ(jantzen_level_multiplicity(tab, g->long_element(), g->identity(), 1), 0);
}

TEST(KL, PolynomialInversionIdentity) {
  for (const std::string t : {"A2", "B2", "A3"}) {
    auto g = group_of(t);
    KLTable tab(g);
    const Elem w0 = g->long_element();
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) {
        IntPolynomial sum;
        for (Elem z = 0; z < g->size(); ++z) {
          if (!g->bruhat_leq(x, z) || !g->bruhat_leq(z, y)) continue;
          IntPolynomial term = tab(x, z) * tab(g->multiply(w0, y), g->multiply(w0, z));
          sum += parity_sign(g->length(z) - g->length(x)) == 1 ? term : -term;
        }
        EXPECT_EQ(sum, x == y ? IntPolynomial(BigInt(1)) : IntPolynomial()) << t;
      }
  }
}
