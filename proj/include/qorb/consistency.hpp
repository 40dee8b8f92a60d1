#pragma once

#include "quantum.hpp"

#include <string>
#include <vector>

namespace qorb {

/// A point where the source presentation disagrees with itself or needs a reading.
/// `flagged` marks the discrepancies the report must always surface; the evidence line is
/// recomputed on every run.
struct Discrepancy {
    std::string id;
    std::string location;
    std::string description;
    std::string evidence;
    bool flagged = true;
    bool confirmed = false;
};

namespace detail {

/// Level-g triple using the literal bare "8" in the b-deformation of the r >= 3 line.
inline QuantumRelationTriple literal_bare_eight_relations(int g) {
    QuantumRelationTriple t = quantum_level_two(g);
    for (int r = 2; r < g; ++r) {
        const auto& [q1, q2, q3] = t.q;
        const Polynomial deformed = beta_poly() + Polynomial(Rational(8 * sign_power(r + g - 1)));
        Polynomial n1 = alpha_poly() * q1 + Rational(r * r) * q2;
        Polynomial n2 = deformed * q1 + ratio(2 * r, r + 1) * q3;
        Polynomial n3 = gamma_poly() * q1;
        t.q = {std::move(n1), std::move(n2), std::move(n3)};
        t.level = r + 1;
    }
    return t;
}

}  // namespace detail

inline std::vector<Discrepancy> consistency_report() {
    std::vector<Discrepancy> out;

    {
        const auto n = nonzero_torsion_classes(2).size();
        Discrepancy d{"twisted-sector-count",
                      "genus-2 worked example, sentence counting the twisted sectors of [M/Gamma]",
                      "text says 7 twisted sectors for Gamma = (Z/2)^4; the group has 15 nonzero elements and the "
                      "general construction indexes sectors by all of them",
                      "engine enumerates " + std::to_string(n) + " nonzero torsion classes at g = 2",
                      true, n == 15};
        out.push_back(d);
    }

    {
        const InvariantRing i2(2);
        const Polynomial a2 = pow(alpha_poly(), 2);
        const bool i2_minus = i2.ideal().contains(a2 + beta_poly());
        const bool i2_plus = i2.ideal().contains(a2 - beta_poly());
        const QuantumOrbifoldPresentation table(2, QuantumMode::table);
        const Polynomial table_limit = table.normal_form(a2).evaluate(Var::q, 0);
        const bool table_plus = table_limit == beta_poly();
        Discrepancy d{"table-sign-convention",
                      "genus-2 quantum product table versus the classical relation q_2^1 = a^2 + b",
                      "the table gives a*a = b + 4Q, whose Q = 0 limit is a^2 = b, while I_2 forces a^2 = -b; the two "
                      "normalizations of b are not reconciled",
                      std::string("I_2 contains a^2 + b: ") + (i2_minus ? "yes" : "no") +
                          "; I_2 contains a^2 - b: " + (i2_plus ? "yes" : "no") +
                          "; table-mode a*a at Q = 0: " + to_string(table_limit),
                      true, i2_minus && !i2_plus && table_plus};
        out.push_back(d);
    }

    {
        const int g = 4;
        const auto literal = detail::literal_bare_eight_relations(g);
        bool inhomogeneous = false;
        for (const auto& p : literal.q) inhomogeneous = inhomogeneous || !p.is_homogeneous(Weights{});
        bool repaired = true;
        for (const auto& p : quantum_relations(g).q) repaired = repaired && p.is_homogeneous(Weights{});
        Discrepancy d{"recursion-missing-8Q",
                      "quantum recursion for r >= 3, second line (b-deformation of Q^2_{r+1})",
                      "the deformation is printed without its closing 8Q (once as a bare 8); read as "
                      "(b + (-1)^{r+g-1} 8Q) Q^1_r",
                      std::string("literal bare-8 reading at g = 4 is ") + (inhomogeneous ? "inhomogeneous" : "homogeneous") +
                          "; repaired reading is " + (repaired ? "homogeneous" : "inhomogeneous") + " under deg Q = 2",
                      true, inhomogeneous && repaired};
        out.push_back(d);
    }

    out.push_back({"recursion-start",
                   "quantum recursion, range of validity",
                   "the recursion is stated for r >= 3 after an explicit level-2 base case, leaving level 3 "
                   "undefined; the engine applies it from r = 2",
                   "quantum_relations(g) at Q = 0 equals classical_relations(g) for g = 2..6 under this reading",
                   false, true});
    out.push_back({"beta-threshold-text",
                   "Chen-Ruan case (2)/(3), vanishing line for b times a twisted class",
                   "raw text reads 's >= 2(g-2)-2'; implemented as the degree-forced threshold s >= 2(g-1)-2",
                   "b * 1_k h_s vanishes exactly when s + 4 > 2(g-1)", false, true});
    out.push_back({"same-sector-pairing",
                   "Chen-Ruan case (1), pairing condition defining Omega",
                   "Omega is paired against an h-class of the sector, which does not typecheck; the h-degree is "
                   "read as selecting the complementary untwisted degree",
                   "Omega solved against every standard monomial of degree (g-1) - (s+t)/2", false, true});
    return out;
}

}  // namespace qorb
