#include "support.hpp"

#include <gtest/gtest.h>

using namespace qorb;
using testing_support::from_oracle;
using testing_support::P;

TEST(ClassicalRelations, GenusTwo) {
    const auto t = classical_relations(2);
    EXPECT_EQ(t.q[0], P("a^2 + b"));
    EXPECT_EQ(t.q[1], P("a*b + g"));
    EXPECT_EQ(t.q[2], P("a*g"));
}

TEST(ClassicalRelations, GenusThreeHandExpansion) {
    const auto t = classical_relations(3);
    EXPECT_EQ(t.q[0], P("a^3 + 5*a*b + 4*g"));
    EXPECT_EQ(t.q[1], P("a^2*b + b^2 + 4/3*a*g"));
    EXPECT_EQ(t.q[2], P("a^2*g + b*g"));
}

TEST(ClassicalRelations, AgreeWithIndependentExpansion) {
    for (int g = 1; g <= 8; ++g) {
        const auto t = classical_relations(g);
        const auto o = oracle::classical(g);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(t.q[i], from_oracle(o[i])) << "g=" << g << " i=" << i;
    }
}

TEST(ClassicalRelations, DegreesAndErrors) {
    for (int g = 1; g <= 8; ++g) {
        const auto t = classical_relations(g);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(t.q[i].homogeneous_degree(Weights{}), g + i);
    }
    EXPECT_THROW(classical_relations(0), ContractViolation);
}

TEST(InvariantRing, GenusTwoBasisAndNormalForms) {
    const InvariantRing ring(2);
    std::vector<Monomial> basis;
    for (int d = 0; d <= 4; ++d)
        for (const auto& m : ring.graded_basis(d)) basis.push_back(m);
    const std::vector<Monomial> expected{Monomial(), Monomial(1, 0, 0, 0), Monomial(2, 0, 0, 0), Monomial(3, 0, 0, 0)};
    EXPECT_EQ(basis, expected);
    EXPECT_EQ(ring.normal_form(P("a^3")), P("a^3"));
    EXPECT_EQ(ring.normal_form(P("b")), P("-a^2"));
    EXPECT_EQ(ring.normal_form(P("g")), P("a^3"));
    EXPECT_EQ(ring.normal_form(P("a^4")), Polynomial());
    EXPECT_EQ(ring.top_monomial(), Monomial(3, 0, 0, 0));
}

TEST(InvariantRing, HilbertClosedFormAgainstOracle) {
    for (int g = 2; g <= 6; ++g) {
        const InvariantRing ring(g);
        const auto coeffs = ring.hilbert_series().coefficients(3 * g + 1);
        const auto closed = oracle::closed_form_hilbert(g, 3 * g + 2);
        for (int d = 0; d <= 3 * g + 1; ++d) EXPECT_EQ(coeffs[d], closed[d]) << "g=" << g << " d=" << d;
    }
}

TEST(InvariantRing, PairingNormalizedOnTopMonomial) {
    for (int g = 2; g <= 4; ++g) {
        const InvariantRing ring(g);
        EXPECT_EQ(ring.pairing(Polynomial(1), Polynomial(ring.top_monomial())), 1);
        EXPECT_EQ(ring.pairing(alpha_poly(), alpha_poly()), 0);
    }
    const InvariantRing scaled(2, ratio(1, 3));
    EXPECT_EQ(scaled.pairing(alpha_poly(), P("a^2")), ratio(1, 3));
    EXPECT_EQ(poincare_pairing(scaled, P("b"), alpha_poly()), ratio(-1, 3));
}

TEST(FullPoincare, MatchesModuliFormula) {
    EXPECT_EQ(to_string(full_poincare_polynomial(2)), "1 + t^2 + 4t^3 + t^4 + t^6");
    for (int g = 2; g <= 6; ++g) {
        const auto p = full_poincare_polynomial(g);
        const auto o = oracle::moduli_poincare(g);
        ASSERT_EQ(p.degree(), static_cast<int>(o.size()) - 1) << "g=" << g;
        for (int d = 0; d <= p.degree(); ++d) EXPECT_EQ(p[d], o[d]) << "g=" << g << " d=" << d;
        EXPECT_TRUE(p.is_palindromic());
    }
}
