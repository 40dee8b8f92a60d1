#include "support.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace qorb;

namespace {

Polynomial random_quantum(std::mt19937_64& rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, max_degree);
    const RingSpec spec{VarSet::quantum(), MonomialOrder(), 64};
    Polynomial p;
    for (int i = 0; i < terms; ++i) {
        const auto monos = monomials_of_degree(spec, deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], ratio(coeff(rng), 1 + (i % 3)));
    }
    return p;
}

}  // namespace

TEST(Property, NormalFormIsProjectionAndMorphism) {
    auto rng = testing_support::rng(1);
    for (int g = 2; g <= 6; ++g) {
        const InvariantRing ring(g);
        for (int i = 0; i < 25; ++i) {
            const Polynomial p = detail::random_polynomial(rng, 3 * g, 5), q = detail::random_polynomial(rng, 3 * g, 5);
            const Polynomial np = ring.normal_form(p);
            EXPECT_EQ(ring.normal_form(np), np);
            EXPECT_EQ(ring.normal_form(p * q), ring.normal_form(np * ring.normal_form(q)));
            EXPECT_EQ(ring.normal_form(p + q), np + ring.normal_form(q));
            for (const auto& [m, c] : np) EXPECT_TRUE(ring.ideal().is_standard(m));
        }
        for (const auto& gen : ring.ideal().generators()) EXPECT_TRUE(ring.normal_form(gen).is_zero());
    }
}

TEST(Property, QuantumNormalFormMorphism) {
    auto rng = testing_support::rng(2);
    for (int g = 2; g <= 4; ++g) {
        const QuantumOrbifoldPresentation p(g);
        for (int i = 0; i < 15; ++i) {
            const Polynomial x = random_quantum(rng, g + 2, 4), y = random_quantum(rng, g + 2, 4);
            EXPECT_EQ(p.normal_form(x * y), p.normal_form(p.normal_form(x) * p.normal_form(y)));
        }
    }
}

TEST(Property, GradedDimensionsMatchHilbert) {
    for (int g = 2; g <= 6; ++g) {
        const InvariantRing ring(g);
        const auto coeffs = ring.hilbert_series().coefficients(3 * g);
        for (int d = 0; d <= 3 * g; ++d) EXPECT_EQ(Integer(static_cast<long>(ring.graded_basis(d).size())), coeffs[d]);
        EXPECT_TRUE(ring.graded_basis(3 * g - 2).empty());
        EXPECT_EQ(ring.graded_basis(3 * g - 3).size(), 1u);
    }
}

TEST(Property, WeilGramMatrixFullRank) {
    for (int g = 2; g <= 6; ++g) {
        std::vector<std::uint64_t> rows;
        for (int i = 1; i <= 2 * g; ++i) {
            std::uint64_t r = 0;
            for (int j = 1; j <= 2 * g; ++j)
                if (weil_pairing(TorsionClass::basis(g, i), TorsionClass::basis(g, j))) r |= 1ull << (j - 1);
            rows.push_back(r);
        }
        int rank = 0;
        for (int bit = 0; bit < 2 * g; ++bit) {
            auto it = std::find_if(rows.begin() + rank, rows.end(), [&](auto r) { return (r >> bit) & 1; });
            if (it == rows.end()) continue;
            std::iter_swap(rows.begin() + rank, it);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (static_cast<int>(k) != rank && ((rows[k] >> bit) & 1)) rows[k] ^= rows[rank];
            ++rank;
        }
        EXPECT_EQ(rank, 2 * g);
    }
}

TEST(Property, PartnerCounts) {
    for (int g = 2; g <= 3; ++g) {
        const auto classes = nonzero_torsion_classes(g);
        EXPECT_EQ(Integer(static_cast<long>(classes.size())), pow2(2 * g) - 1);
        for (const auto& k : classes) {
            long n = 0;
            for (const auto& l : classes) n += weil_pairing(k, l);
            EXPECT_EQ(Integer(n), pow2(2 * g - 1));
        }
    }
}

TEST(Property, RandomClassesChenRuanBilinearCommutative) {
    auto rng = testing_support::rng(3);
    const ChenRuanAlgebra a(2);
    const auto basis = a.basis();
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_class = [&] {
        OrbifoldClass x(2);
        for (int i = 0; i < 3; ++i) x += Rational(coeff(rng)) * basis[pick(rng)];
        return x;
    };
    for (int i = 0; i < 60; ++i) {
        const auto x = random_class(), y = random_class(), z = random_class();
        EXPECT_EQ(a.product(x, y), a.product(y, x));
        EXPECT_EQ(a.product(x, y + z), a.product(x, y) + a.product(x, z));
        EXPECT_EQ(a.pairing(x, y), a.pairing(y, x));
    }
}

TEST(Property, ParsePrintRoundTripOnRandomPolynomials) {
    auto rng = testing_support::rng(4);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = random_quantum(rng, 8, 5);
        EXPECT_EQ(parse_polynomial(to_string(p)), p) << to_string(p);
        EXPECT_EQ(print(*parse(to_string(p), 2)), to_string(p));
    }
}

TEST(Property, ConcurrentReadsAgree) {
    const QuantumOrbifoldPresentation p(3);
    const OrbifoldClass a3(3, alpha_poly());
    const auto expected = p.product(p.product(a3, a3), a3);
    std::vector<std::thread> pool;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { ok[t] = p.product(p.product(a3, a3), a3) == expected; });
    for (auto& th : pool) th.join();
    for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(Property, CheckHarnessPasses) {
    const auto results = run_checks(2, 4);
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.suite << ": " << r.name << " " << r.detail;
}

TEST(Property, ConsistencyReportConfirmed) {
    const auto report = consistency_report();
    std::vector<std::string> flagged;
    for (const auto& d : report) {
        EXPECT_TRUE(d.confirmed) << d.id;
        EXPECT_FALSE(d.location.empty());
        if (d.flagged) flagged.push_back(d.id);
    }
    EXPECT_EQ(flagged, (std::vector<std::string>{"twisted-sector-count", "table-sign-convention", "recursion-missing-8Q"}));
}
