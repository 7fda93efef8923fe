#include "hypersecant/hypersecant.hpp"
#include "oracles.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace hypersecant;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST(Polynomial, AdditionIdentityAndCancellation) {
  const Polynomial p = P("+3*x[1,2]*x[3,4] -2*x[2,5]");
  EXPECT_EQ(add(p, Polynomial()), p);
  EXPECT_TRUE(add(Polynomial::x(1, 2), -Polynomial::x(1, 2)).is_zero());
  const Polynomial cubic = parse_polynomial(kPrintedCubic);
  EXPECT_TRUE(add(cubic, -cubic).is_zero());
}

TEST(Polynomial, MultiplicationHandExpanded) {
  const Polynomial m = mul(Polynomial::x(1, 2), Polynomial::x(3, 4));
  ASSERT_EQ(m.term_count(), 1u);
  EXPECT_EQ(m.degree(), 2u);
  EXPECT_EQ(m.coefficient(Monomial::of_edges({{1, 2}, {3, 4}})), 1);

  // (A - B)(C - B) = AC - AB - BC + B^2 with A = x12x34, B = x13x24, C = x14x23.
  const Polynomial f = P("x[1,2]*x[3,4] - x[1,3]*x[2,4]");
  const Polynomial g = P("x[1,4]*x[2,3] - x[1,3]*x[2,4]");
  const Polynomial expected = P(
      "+1*x[1,2]*x[3,4]*x[1,4]*x[2,3] -1*x[1,2]*x[3,4]*x[1,3]*x[2,4] "
      "-1*x[1,3]*x[2,4]*x[1,4]*x[2,3] +1*x[1,3]^2*x[2,4]^2");
  const Polynomial fg = mul(f, g);
  EXPECT_EQ(fg, expected);
  EXPECT_EQ(fg.term_count(), 4u);
  EXPECT_TRUE(fg.is_homogeneous());
  EXPECT_EQ(fg.degree(), 4u);
  EXPECT_TRUE(mul(f, Polynomial()).is_zero());
}

TEST(Polynomial, ArbitraryPrecisionCoefficients) {
  const Integer big = Integer(1) << 200;
  Polynomial p(Monomial::of_edges({{1, 2}}), big);
  const Polynomial sq = p * p;
  EXPECT_EQ(sq.coefficient(Monomial(Variable::x(1, 2), 2)), Integer(1) << 400);
  EXPECT_TRUE((sq - sq).is_zero());
}

TEST(Polynomial, PartialDerivatives) {
  EXPECT_EQ(partial_derivative(P("x[1,2]*x[3,4]"), {Edge(1, 2)}), P("x[3,4]"));
  EXPECT_EQ(partial_derivative(P("x[1,2]^2"), {Edge(1, 2)}), P("2*x[1,2]"));
  EXPECT_EQ(partial_derivative(P("x[1,2]^3*x[3,4]"), {Edge(1, 2), Edge(1, 2), Edge(3, 4)}), P("6*x[1,2]"));
  EXPECT_TRUE(partial_derivative(P("x[1,2]"), {Edge(3, 4)}).is_zero());
  EXPECT_THROW(partial_derivative(P("x[1,2]"), std::span<const Edge>()), Error);
}

TEST(Polynomial, PentadDerivativeIsInToricIdeal) {
  const Polynomial pentad = parse_polynomial(kPrintedPentad);
  for (const auto& e : all_edges(5)) {
    const Polynomial d = partial_derivative(pentad, {e});
    if (d.is_zero()) continue;
    EXPECT_EQ(d.degree(), 4u);
    EXPECT_TRUE(substitute_rank(d, 1).is_zero()) << Variable::x(e).to_string();
  }
}

TEST(Polynomial, SubstituteRank) {
  EXPECT_EQ(substitute_rank(P("x[1,2]"), 1), Polynomial(Monomial{Variable::t(1), Variable::t(2)}));
  EXPECT_EQ(substitute_rank(P("x[1,2]"), 2),
            Polynomial(Monomial{Variable::t(1), Variable::t(2)}) + Polynomial(Monomial{Variable::u(1), Variable::u(2)}));
  EXPECT_TRUE(substitute_rank(P("x[1,2]*x[3,4] - x[1,3]*x[2,4]"), 1).is_zero());
  EXPECT_TRUE(substitute_rank(parse_polynomial(kPrintedPentad), 2).is_zero());
  EXPECT_FALSE(substitute_rank(P("x[1,2]*x[3,4] - x[1,3]*x[2,4]"), 2).is_zero());
  EXPECT_THROW(substitute_rank(P("x[1,2]"), 0), Error);
  EXPECT_THROW(substitute_rank(P("x[1,2]"), 3), Error);
}

TEST(Polynomial, EdgeValidation) {
  EXPECT_THROW(Variable::x(2, 2), Error);
  EXPECT_THROW(Variable::x(0, 3), Error);
  EXPECT_EQ(Edge(4, 1), Edge(1, 4));
}

TEST(Polynomial, TextRoundTrip) {
  const Polynomial p = P("-7*x[2,3]^2*x[1,4] + x[1,2] - 12");
  EXPECT_EQ(parse_polynomial(to_string(p)), p);
  EXPECT_EQ(P("x[3,4]*x[1,2]"), P("+1*x[1,2]*x[3,4]"));
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(format_term(Monomial::of_edges({{1, 2}, {3, 4}}), 1), "+1*x[1,2]*x[3,4]");
  EXPECT_THROW(P("x[1,2"), Error);
  EXPECT_THROW(P("x[1,2] x[3,4]"), Error);
  EXPECT_THROW(P("y[1,2]"), Error);
}

TEST(Polynomial, MonomialDivisibility) {
  const Monomial a = parse_monomial("x[1,2]^2*x[3,4]");
  const Monomial b = parse_monomial("x[1,2]");
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(b.quotient_of(a), parse_monomial("x[1,2]*x[3,4]"));
  EXPECT_EQ(lcm(a, parse_monomial("x[5,6]")), parse_monomial("x[1,2]^2*x[3,4]*x[5,6]"));
  EXPECT_EQ(gcd(a, parse_monomial("x[1,2]^5")), parse_monomial("x[1,2]^2"));
  EXPECT_FALSE(a.is_squarefree());
}

TEST(PolynomialProperties, RingLaws) {
  const auto r = properties::ring_laws(1000, 101);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(PolynomialProperties, LeibnizRule) {
  const auto r = properties::leibniz_rule(1000, 202);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(PolynomialProperties, SubstitutionIsHomomorphism) {
  const auto r = properties::substitution_homomorphism(1000, 303);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
