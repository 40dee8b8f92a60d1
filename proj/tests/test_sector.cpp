#include "support.hpp"

#include <gtest/gtest.h>

using namespace qorb;

TEST(Sector, RanksAreBinomial) {
    for (int g = 2; g <= 8; ++g) {
        Integer total = 0;
        for (int s = 0; s <= 2 * (g - 1); s += 2) {
            EXPECT_EQ(sector_rank(g, s), binomial(2 * (g - 1), s));
            total += sector_rank(g, s);
        }
        EXPECT_EQ(sector_total_rank(g), pow2(2 * g - 3));
        EXPECT_EQ(total, sector_total_rank(g));
    }
    EXPECT_THROW(sector_rank(2, 4), ContractViolation);
    EXPECT_THROW(sector_rank(1, 0), ContractViolation);
}

TEST(Sector, AgeAndIntegral) {
    for (int g = 2; g <= 8; ++g) {
        const TorsionClass k = TorsionClass::basis(g, 1);
        EXPECT_EQ(age(k), g - 1);
        EXPECT_EQ(age(TorsionClass::zero(g)), 0);
        const std::map<SectorElement, Rational> top{{SectorElement::top(k), 1}, {SectorElement::unit(k), 5}};
        EXPECT_EQ(sector_integral(g, top), Rational(1) / Rational(pow2(2 * g)));
    }
}

TEST(Torsion, BitStringsAndPairing) {
    const TorsionClass k = TorsionClass::from_bits(2, "1000");
    EXPECT_EQ(k.bit_string(), "1000");
    EXPECT_EQ(k, TorsionClass::basis(2, 1));
    EXPECT_EQ(weil_pairing(TorsionClass::basis(2, 1), TorsionClass::basis(2, 3)), 1);
    EXPECT_EQ(weil_pairing(TorsionClass::basis(2, 1), TorsionClass::basis(2, 2)), 0);
    EXPECT_EQ(weil_pairing(TorsionClass::basis(2, 1), TorsionClass::basis(2, 1)), 0);
    EXPECT_THROW(TorsionClass::from_bits(2, "100"), ContractViolation);
    EXPECT_THROW(TorsionClass::from_bits(2, "10x0"), ContractViolation);
    EXPECT_EQ(nonzero_torsion_classes(2).size(), 15u);
    EXPECT_EQ(nonzero_torsion_classes(3).size(), 63u);
}

TEST(Torsion, PairingIsBilinearAndSymmetric) {
    const auto classes = nonzero_torsion_classes(3);
    for (const auto& x : classes)
        for (const auto& y : classes) {
            EXPECT_EQ(weil_pairing(x, y), weil_pairing(y, x));
            if (x != y) {
                const auto xy = x + y;
                for (const auto& z : {classes[0], classes[7], classes[40]})
                    EXPECT_EQ(weil_pairing(xy, z), (weil_pairing(x, z) + weil_pairing(y, z)) % 2);
            }
        }
}

TEST(Sector, ElementValidationAndShift) {
    const TorsionClass k = TorsionClass::basis(3, 2);
    EXPECT_THROW(SectorElement(k, 1, 1), ContractViolation);
    EXPECT_THROW(SectorElement(k, 6, 1), ContractViolation);
    EXPECT_THROW(SectorElement(k, 0, 2), ContractViolation);
    EXPECT_THROW(SectorElement(TorsionClass::zero(3), 0, 1), ContractViolation);
    EXPECT_EQ(sector_generators(k).size(), 8u);
    const SectorElement e(k, 2, 6);
    EXPECT_EQ(restrict_shift(e, 2), SectorElement(k, 4, 1));
    EXPECT_FALSE(restrict_shift(e, 4).has_value());
    EXPECT_EQ(e.real_degree(), 6);
    EXPECT_EQ(to_string(e), "t[010000]:h2:6");
}
