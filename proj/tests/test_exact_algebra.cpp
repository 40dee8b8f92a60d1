#include "support.hpp"

#include <gtest/gtest.h>

using namespace qorb;
using testing_support::P;

TEST(Rational, FractionStringsAreCanonical) {
    EXPECT_EQ(fraction_string(ratio(6, -4)), "-3/2");
    EXPECT_EQ(fraction_string(Rational(0)), "0/1");
    EXPECT_EQ(fraction_string(Rational(7)), "7/1");
    EXPECT_EQ(parse_rational("10/4"), ratio(5, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, Combinatorics) {
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(4, 7), 0);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(pow2(10), 1024);
    EXPECT_EQ(power(ratio(-2, 3), 3), ratio(-8, 27));
    EXPECT_EQ(sign_power(3), -1);
}

TEST(Monomial, PowerBasisOrderPrefersAlphaPowers) {
    const MonomialOrder o;
    EXPECT_TRUE(o.greater(Monomial(0, 1, 0, 0), Monomial(2, 0, 0, 0)));
    EXPECT_TRUE(o.greater(Monomial(0, 0, 1, 0), Monomial(1, 1, 0, 0)));
    EXPECT_TRUE(o.greater(Monomial(0, 0, 1, 0), Monomial(3, 0, 0, 0)));
    EXPECT_TRUE(o.greater(Monomial(0, 0, 0, 1), Monomial(0, 1, 0, 0)) == false);
    EXPECT_TRUE(o.greater(Monomial(4, 0, 0, 0), Monomial(0, 0, 1, 0)));
}

TEST(Monomial, DisplayOrderIsAlphaFirstGrevlex) {
    const MonomialOrder o = display_order();
    EXPECT_TRUE(o.greater(Monomial(2, 0, 0, 0), Monomial(0, 1, 0, 0)));
    EXPECT_TRUE(o.greater(Monomial(1, 1, 0, 0), Monomial(0, 0, 1, 0)));
    EXPECT_EQ(to_string(Monomial(2, 0, 1, 1)), "a^2*g*Q");
    EXPECT_EQ(to_string(Monomial(2, 0, 1, 1), true), "α^2*γ*𝔔");
}

TEST(Polynomial, ArithmeticAndPrinting) {
    const Polynomial a = alpha_poly(), b = beta_poly();
    EXPECT_EQ(to_string((a + b) * (a - b)), "-b^2 + a^2");
    EXPECT_EQ(to_string(pow(a + Polynomial(1), 3)), "a^3 + 3*a^2 + 3*a + 1");
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(to_string(ratio(1, 2) * a * gamma_poly() - Rational(3) * q_poly()), "1/2*a*g - 3*Q");
    EXPECT_EQ((a * a + b).homogeneous_degree(Weights{}), 2);
    EXPECT_FALSE((a + b).homogeneous_degree(Weights{}).has_value());
    EXPECT_EQ((a * q_poly() + b).evaluate(Var::q, 0), b);
    EXPECT_EQ(P("a^2*b").substitute(Var::beta, P("a + Q")), P("a^3 + a^2*Q"));
}

TEST(Groebner, QuantumGenusTwoBasis) {
    const IdealPresentation ideal({P("a^2 + b + 8*Q"), P("a*b + g + 8*a*Q"), P("a*g + a^2*Q")},
                                  RingSpec{VarSet::quantum(), MonomialOrder(), 64});
    const std::vector<Polynomial> expected{P("a^4 + a^2*Q"), P("-a^3 + g"), P("a^2 + b + 8*Q")};
    ASSERT_EQ(ideal.basis().size(), 3u);
    for (const auto& p : expected) EXPECT_TRUE(ideal.contains(p)) << to_string(p);
    EXPECT_EQ(ideal.normal_form(P("g")), P("a^3"));
    EXPECT_EQ(ideal.normal_form(P("b")), P("-a^2 - 8*Q"));
}

TEST(Groebner, TableIdealGrevlex) {
    const IdealPresentation ideal(g2_table_relations(), quantum_ring_spec(QuantumMode::table));
    for (const auto& p : {P("b^2 + b*Q - 8*Q^2"), P("b*g + 3*g*Q - 2*a*Q^2"), P("g^2 + 3*b*Q^2 - 8*Q^3")})
        EXPECT_TRUE(ideal.contains(p)) << to_string(p);
    EXPECT_EQ(ideal.normal_form(P("a^2")), P("b + 4*Q"));
}

TEST(Groebner, ReducedBasisIsMonicAndInterreduced) {
    const InvariantRing ring(4);
    const auto& basis = ring.ideal().basis();
    const MonomialOrder o;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto [lead, c] = basis[i].leading_term(o);
        EXPECT_EQ(c, 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, cc] : basis[j]) EXPECT_FALSE(lead.divides(m));
        }
    }
}

TEST(Groebner, DegreeCapAndInhomogeneous) {
    EXPECT_THROW(IdealPresentation(as_vector_triple(classical_relations(5)), classical_ring_spec(6)), DegreeCapExceeded);
    const IdealPresentation inhom({P("a^2 + 1")}, classical_ring_spec());
    EXPECT_THROW(inhom.hilbert_series(), InhomogeneousIdeal);
    EXPECT_THROW(IdealPresentation({P("a + Q")}, classical_ring_spec()), ContractViolation);
}

TEST(Hilbert, MatchesPerDegreeLinearAlgebra) {
    for (int g = 2; g <= 5; ++g) {
        const InvariantRing ring(g);
        const auto hs = ring.hilbert_series();
        const auto coeffs = hs.coefficients(3 * g + 2);
        for (int d = 0; d <= 3 * g + 2; ++d) EXPECT_EQ(coeffs[d], oracle::quotient_dimension(g, d)) << "g=" << g << " d=" << d;
    }
}

TEST(Univariate, SeriesOperations) {
    const SeriesPolynomial p = SeriesPolynomial::one_minus(2) * SeriesPolynomial::one_minus(3);
    EXPECT_EQ(to_string(p), "1 - t^2 - t^3 + t^5");
    const auto q = p.divide_one_minus(2);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, SeriesPolynomial::one_minus(3));
    EXPECT_FALSE(SeriesPolynomial::one_minus(3).divide_one_minus(2).has_value());
    EXPECT_TRUE(SeriesPolynomial::monomial(0).is_palindromic());
}

TEST(LinearAlgebra, RankAndSolve) {
    Matrix m(3, 3);
    const int v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
    EXPECT_EQ(m.rank(), 2u);
    EXPECT_FALSE(solve(m, {1, 1, 1}).has_value());
    Matrix n(2, 2);
    n(0, 0) = 2;
    n(0, 1) = 1;
    n(1, 0) = 1;
    n(1, 1) = 3;
    const auto x = solve(n, {3, 5});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], ratio(4, 5));
    EXPECT_EQ((*x)[1], ratio(7, 5));
}

TEST(Groebner, EdgeIdeals) {
    const IdealPresentation zero({}, classical_ring_spec());
    EXPECT_TRUE(zero.basis().empty());
    EXPECT_EQ(zero.normal_form(P("a*b + g")), P("a*b + g"));
    EXPECT_EQ(zero.graded_basis(1), std::vector<Monomial>{Monomial(1, 0, 0, 0)});
    EXPECT_EQ(to_string(zero.hilbert_series()), to_string(RationalSeries{SeriesPolynomial::monomial(0), {1, 2, 3}}));
    EXPECT_TRUE(zero.normal_form(Polynomial()).is_zero());
    const IdealPresentation single({P("a")}, classical_ring_spec());
    EXPECT_EQ(single.basis(), std::vector<Polynomial>{P("a")});
    const InvariantRing i2(2);
    EXPECT_EQ(to_string(i2.hilbert_series()), "1 + t + t^2 + t^3");
    EXPECT_EQ(i2.graded_basis(3), std::vector<Monomial>{Monomial(3, 0, 0, 0)});
    EXPECT_TRUE(i2.graded_basis(4).empty());
    EXPECT_TRUE(i2.normal_form(P("a^2 + b")).is_zero());
}
