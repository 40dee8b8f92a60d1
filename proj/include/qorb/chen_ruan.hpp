#pragma once

#include "classical.hpp"
#include "linalg.hpp"
#include "orbifold_class.hpp"

#include <vector>

namespace qorb {

/// Chen-Ruan cohomology of [M/Gamma]: the invariant ring Q[a,b,g]/I_g plus the
/// 2^{2g} - 1 twisted Prym sectors, with the degree-zero orbifold cup product.
///
/// The classes Omega of the same-sector case are solved for once at construction,
/// so a built algebra is immutable and safe for concurrent use.
class ChenRuanAlgebra {
public:
    explicit ChenRuanAlgebra(int g, Rational normalization = 1) : ring_(g, std::move(normalization)) {
        for (int u = 0; u <= g - 1; ++u) omegas_.push_back(solve_omega(u));
    }

    int genus() const { return ring_.genus(); }
    const InvariantRing& ring() const { return ring_; }
    Rational group_order() const { return Rational(qorb::group_order(genus())); }

    /// Same-sector product class for s + t = 2u: the untwisted class of algebraic degree
    /// 2(g-1) + u pairing to 1/|Gamma| with every standard monomial of degree (g-1) - u.
    const Polynomial& omega(int s_plus_t) const {
        if (s_plus_t < 0 || s_plus_t % 2 != 0 || s_plus_t > top_sector_degree(genus()))
            throw ContractViolation("omega: s + t must be even and at most 2(g-1)");
        return omegas_[static_cast<std::size_t>(s_plus_t / 2)];
    }

    /// Untwisted class times a twisted generator (either order): restriction to the sector.
    OrbifoldClass act(const Polynomial& p, const SectorElement& e) const {
        require_genus(e.genus());
        OrbifoldClass out(genus());
        for (const auto& [m, c] : p) {
            if (m[Var::q] != 0) throw ContractViolation("classical product does not involve Q");
            if (auto image = restrict_shift(e, 2 * m.degree(ring_.ideal().weights())))
                out.add_twisted(*image, Polynomial(c));
        }
        return out;
    }

    /// Product of two twisted generators.
    OrbifoldClass twisted_product(const SectorElement& x, const SectorElement& y) const {
        require_genus(x.genus());
        require_genus(y.genus());
        const int g = genus();
        if (x.kappa == y.kappa) {
            if (x.s + y.s > top_sector_degree(g)) return OrbifoldClass(g);
            return OrbifoldClass(g, omega(x.s + y.s));
        }
        if (weil_pairing(x.kappa, y.kappa) == 1 && x.s == 0 && y.s == 0)
            return OrbifoldClass(SectorElement::top(x.kappa + y.kappa), Polynomial(Rational(pow2(2 * g - 2))));
        return OrbifoldClass(g);
    }

    OrbifoldClass product(const OrbifoldClass& x, const OrbifoldClass& y) const {
        require_genus(x.genus());
        require_genus(y.genus());
        OrbifoldClass out(genus(), ring_.multiply(x.untwisted(), y.untwisted()));
        for (const auto& [e, c] : y.twisted()) out += c * act(x.untwisted(), e);
        for (const auto& [e, c] : x.twisted()) out += c * act(y.untwisted(), e);
        for (const auto& [ex, cx] : x.twisted())
            for (const auto& [ey, cy] : y.twisted()) out += (cx * cy) * twisted_product(ex, ey);
        return out;
    }

    /// Sector-diagonal pairing: untwisted classes pair through the invariant ring scaled by
    /// 1/|Gamma|; (k, s, i) pairs with (k, 2(g-1) - s, i) to 1/|Gamma|.
    Rational pairing(const OrbifoldClass& x, const OrbifoldClass& y) const {
        require_genus(x.genus());
        require_genus(y.genus());
        Rational total = ring_.pairing(x.untwisted(), y.untwisted()) / group_order();
        for (const auto& [ex, cx] : x.twisted()) {
            for (const auto& [ey, cy] : y.twisted()) {
                if (ex.kappa != ey.kappa || ex.index != ey.index) continue;
                if (ex.s + ey.s != top_sector_degree(genus())) continue;
                total += constant(cx) * constant(cy) / group_order();
            }
        }
        return total;
    }

    /// Basis of the invariant Chen-Ruan space: standard monomials, then every sector generator.
    std::vector<OrbifoldClass> basis() const {
        std::vector<OrbifoldClass> out;
        for (int d = 0; d <= ring_.top_degree(); ++d)
            for (const auto& m : ring_.graded_basis(d)) out.emplace_back(genus(), Polynomial(m));
        for (const auto& k : nonzero_torsion_classes(genus()))
            for (const auto& e : sector_generators(k)) out.emplace_back(e);
        return out;
    }

private:
    void require_genus(int g) const {
        if (g != genus()) throw ContractViolation("genus mismatch: algebra has genus " + std::to_string(genus()));
    }

    static Rational constant(const Polynomial& c) {
        if (c.is_zero()) return 0;
        if (c.size() != 1 || !c.begin()->first.is_one())
            throw ContractViolation("pairing needs scalar coefficients");
        return c.begin()->second;
    }

    Polynomial solve_omega(int u) const {
        const int g = genus();
        const auto target = ring_.graded_basis(2 * (g - 1) + u);
        const auto partners = ring_.graded_basis((g - 1) - u);
        if (target.size() != partners.size()) throw std::logic_error("pairing blocks are not square");
        const std::size_t n = target.size();
        Matrix a(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) a(j, i) = ring_.pairing(Polynomial(target[i]), Polynomial(partners[j]));
        // <Omega, h>_orb = (1/|Gamma|) pairing  must equal 1/|Gamma|
        const auto x = solve(a, std::vector<Rational>(n, Rational(1)));
        if (!x) throw std::logic_error("Poincaré pairing is degenerate");
        Polynomial omega;
        for (std::size_t i = 0; i < n; ++i) omega.add_term(target[i], (*x)[i]);
        return omega;
    }

    InvariantRing ring_;
    std::vector<Polynomial> omegas_;
};

inline OrbifoldClass cr_product(const ChenRuanAlgebra& algebra, const OrbifoldClass& x, const OrbifoldClass& y) {
    return algebra.product(x, y);
}

inline Rational orbifold_pairing(const ChenRuanAlgebra& algebra, const OrbifoldClass& x, const OrbifoldClass& y) {
    return algebra.pairing(x, y);
}

/// Untwisted Poincaré polynomial plus (2^{2g} - 1) copies of the sector ranks shifted by 2 age.
inline SeriesPolynomial cr_poincare_polynomial(int g) {
    SeriesPolynomial p = full_poincare_polynomial(g);
    const Integer sectors = group_order(g) - 1;
    for (int s = 0; s <= top_sector_degree(g); s += 2)
        p += SeriesPolynomial::monomial(s + 2 * (g - 1), sectors * sector_rank(g, s));
    return p;
}

/// Classical presentation (I_g, I_orb) in the form compared against quantum limits.
struct TwistedAlphaRule {
    int s = 0;
    OrbifoldClass rhs{2};

    friend bool operator==(const TwistedAlphaRule&, const TwistedAlphaRule&) = default;
};

struct ChenRuanPresentation {
    int genus = 2;
    std::vector<Polynomial> relations;
    /// a * 1_k h_s for the representative generator (e_1, s, 1), one entry per even s.
    std::vector<TwistedAlphaRule> alpha_rules;

    friend bool operator==(const ChenRuanPresentation&, const ChenRuanPresentation&) = default;
};

inline ChenRuanPresentation chen_ruan_presentation(const ChenRuanAlgebra& algebra) {
    const int g = algebra.genus();
    ChenRuanPresentation p;
    p.genus = g;
    p.relations = as_vector_triple(classical_relations(g));
    const TorsionClass k = TorsionClass::basis(g, 1);
    for (int s = 0; s <= top_sector_degree(g); s += 2)
        p.alpha_rules.push_back({s, algebra.act(alpha_poly(), SectorElement(k, s, 1))});
    return p;
}

}  // namespace qorb
