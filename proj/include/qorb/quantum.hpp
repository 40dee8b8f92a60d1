#pragma once

#include "chen_ruan.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qorb {

/// Level-r triple of the quantum-deformed recursion, in a, b, g, Q.
struct QuantumRelationTriple {
    int level = 0;
    std::array<Polynomial, 3> q{Polynomial(1), Polynomial(), Polynomial()};

    friend bool operator==(const QuantumRelationTriple&, const QuantumRelationTriple&) = default;
};

/// b + (-1)^k 8Q
inline Polynomial deformed_beta(int k) { return beta_poly() + Rational(8 * sign_power(k)) * q_poly(); }

/// Explicit level-2 triple for genus g.
inline QuantumRelationTriple quantum_level_two(int g) {
    QuantumRelationTriple t;
    t.level = 2;
    t.q = {pow(alpha_poly(), 2) + deformed_beta(g), alpha_poly() * deformed_beta(g) + gamma_poly(),
           alpha_poly() * gamma_poly() + pow(alpha_poly(), 2) * q_poly()};
    return t;
}

/// Level 1 is (a, b + (-1)^g 8Q, g); level 2 is the explicit base case; from level 2 on
/// Q1' = a Q1 + r^2 Q2, Q2' = (b + (-1)^{r+g-1} 8Q) Q1 + 2r/(r+1) Q3, Q3' = g Q1.
inline QuantumRelationTriple quantum_relations(int g) {
    if (g < 1) throw ContractViolation("quantum_relations: genus must be at least 1");
    QuantumRelationTriple t;
    t.level = 1;
    t.q = {alpha_poly(), deformed_beta(g), gamma_poly()};
    if (g == 1) return t;
    t = quantum_level_two(g);
    for (int r = 2; r < g; ++r) {
        const auto& [q1, q2, q3] = t.q;
        Polynomial n1 = alpha_poly() * q1 + Rational(r * r) * q2;
        Polynomial n2 = deformed_beta(r + g - 1) * q1 + ratio(2 * r, r + 1) * q3;
        Polynomial n3 = gamma_poly() * q1;
        t.q = {std::move(n1), std::move(n2), std::move(n3)};
        t.level = r + 1;
    }
    return t;
}

inline std::vector<Polynomial> as_vector_triple(const QuantumRelationTriple& t) { return {t.q[0], t.q[1], t.q[2]}; }

/// Substitute Q = 0 in each member of the triple.
inline ClassicalRelationTriple specialize_q_zero(const QuantumRelationTriple& t) {
    ClassicalRelationTriple c;
    c.level = t.level;
    for (std::size_t i = 0; i < 3; ++i) c.q[i] = t.q[i].evaluate(Var::q, 0);
    return c;
}

/// a *_Q 1_k h_s = 1_k a h_s + 1_k h_s Q, where the first term is the classical
/// restriction and vanishes at the top degree.
inline OrbifoldClass twisted_alpha_product(const SectorElement& e) {
    e.validate();
    OrbifoldClass out(e.genus());
    if (auto shifted = restrict_shift(e, 2)) out.add_twisted(*shifted, Polynomial(1));
    out.add_twisted(e, q_poly());
    return out;
}

inline OrbifoldClass twisted_alpha_product(int g, const TorsionClass& kappa, int s, int index = 1) {
    if (kappa.genus() != g) throw ContractViolation("twisted_alpha_product: genus mismatch");
    if (s % 2 != 0) throw ContractViolation("twisted_alpha_product: odd sector degree " + std::to_string(s));
    return twisted_alpha_product(SectorElement(kappa, s, index));
}

/// relations: untwisted products reduce modulo (Q_g^1, Q_g^2, Q_g^3).
/// table: genus 2 only; reduces modulo (a^2 - b - 4Q, a b - g - 2aQ, a g - bQ), the
/// ideal whose normal forms are the constants of the genus-2 table.
enum class QuantumMode { relations, table };

inline std::string to_string(QuantumMode m) { return m == QuantumMode::relations ? "relations" : "table"; }

inline QuantumMode parse_mode(const std::string& text) {
    if (text == "relations") return QuantumMode::relations;
    if (text == "table") return QuantumMode::table;
    throw ContractViolation("unknown mode '" + text + "' (expected relations or table)");
}

inline RingSpec quantum_ring_spec(QuantumMode mode, int degree_cap = 64) {
    const auto kind = mode == QuantumMode::relations ? MonomialOrder::Kind::power_basis : MonomialOrder::Kind::grevlex;
    return RingSpec{VarSet::quantum(), MonomialOrder(kind, Weights{}), degree_cap};
}

inline std::vector<Polynomial> g2_table_relations() {
    const Polynomial& a = alpha_poly();
    const Polynomial& b = beta_poly();
    const Polynomial& c = gamma_poly();
    const Polynomial& q = q_poly();
    return {a * a - b - Rational(4) * q, a * b - c - Rational(2) * a * q, a * c - b * q};
}

/// Presentation of the Sp-invariant quantum orbifold cohomology: the untwisted quantum
/// ideal, the twisted a-products and the Chen-Ruan data underneath. Immutable once built.
class QuantumOrbifoldPresentation {
public:
    explicit QuantumOrbifoldPresentation(int g, QuantumMode mode = QuantumMode::relations, int degree_cap = 64)
        : mode_(mode),
          algebra_(std::make_shared<const ChenRuanAlgebra>(check(g, mode))),
          ideal_(mode == QuantumMode::relations ? as_vector_triple(quantum_relations(g)) : g2_table_relations(),
                 quantum_ring_spec(mode, degree_cap)) {}

    int genus() const { return algebra_->genus(); }
    QuantumMode mode() const { return mode_; }
    const ChenRuanAlgebra& chen_ruan() const { return *algebra_; }
    const IdealPresentation& ideal() const { return ideal_; }
    const std::vector<Polynomial>& relations() const { return ideal_.generators(); }

    /// The a-products on the representative generators (e_1, s, 1).
    std::vector<TwistedAlphaRule> i_quantum() const {
        std::vector<TwistedAlphaRule> out;
        const TorsionClass k = TorsionClass::basis(genus(), 1);
        for (int s = 0; s <= top_sector_degree(genus()); s += 2)
            out.push_back({s, twisted_alpha_product(SectorElement(k, s, 1))});
        return out;
    }

    Polynomial normal_form(const Polynomial& p) const { return ideal_.normal_form(p); }

    OrbifoldClass product(const OrbifoldClass& x, const OrbifoldClass& y) const {
        x.require_same_genus(OrbifoldClass(genus()));
        y.require_same_genus(OrbifoldClass(genus()));
        OrbifoldClass out(genus(), normal_form(x.untwisted() * y.untwisted()));
        for (const auto& [e, c] : y.twisted()) out += c * act(x.untwisted(), e);
        for (const auto& [e, c] : x.twisted()) out += c * act(y.untwisted(), e);
        for (const auto& [ex, cx] : x.twisted())
            for (const auto& [ey, cy] : y.twisted()) out += (cx * cy) * algebra_->twisted_product(ex, ey);
        return out;
    }

    /// Untwisted polynomial times a twisted generator, term by term: a picks up the
    /// Q-correction, every other monomial in a, b, g acts classically; powers of Q ride along.
    OrbifoldClass act(const Polynomial& p, const SectorElement& e) const {
        OrbifoldClass out(genus());
        for (const auto& [m, c] : p) {
            const Monomial classical = m.without(Var::q);
            const Polynomial coeff(Monomial::of(Var::q, m[Var::q]), c);
            if (classical == Monomial::of(Var::alpha))
                out += coeff * twisted_alpha_product(e);
            else
                out += coeff * algebra_->act(Polynomial(classical), e);
        }
        return out;
    }

private:
    static int check(int g, QuantumMode mode) {
        if (g < 2) throw ContractViolation("quantum presentation needs genus >= 2");
        if (mode == QuantumMode::table && g != 2) throw ContractViolation("table mode is defined for genus 2 only");
        return g;
    }

    QuantumMode mode_;
    std::shared_ptr<const ChenRuanAlgebra> algebra_;
    IdealPresentation ideal_;
};

inline OrbifoldClass quantum_product(const QuantumOrbifoldPresentation& p, const OrbifoldClass& x,
                                     const OrbifoldClass& y) {
    return p.product(x, y);
}

/// Q = 0 in every relation and every twisted a-product.
inline ChenRuanPresentation classical_limit(const QuantumOrbifoldPresentation& p) {
    ChenRuanPresentation out;
    out.genus = p.genus();
    for (const auto& r : p.relations()) out.relations.push_back(r.evaluate(Var::q, 0));
    for (const auto& rule : p.i_quantum()) out.alpha_rules.push_back({rule.s, rule.rhs.evaluate(Var::q, 0)});
    return out;
}

/// One line of the genus-2 quantum product table, as printed (Unicode) and as
/// parseable ASCII with k standing for any nonzero torsion class.
struct TableLine {
    std::string left;
    std::string right;
    std::string result;
    std::string ascii_left;
    std::string ascii_right;
    std::string ascii_result;
    bool modeled = true;
};

inline const std::vector<TableLine>& g2_table() {
    static const std::vector<TableLine> table = {
        {"α", "α", "β + 4·1_0𝔔", "a", "a", "b + 4*Q", true},
        {"α", "β", "γ + 2·1_0α𝔔", "a", "b", "g + 2*a*Q", true},
        {"α", "γ", "1_0β𝔔", "a", "g", "b*Q", true},
        {"α", "ψ_i", "0", "a", "psi_i", "0", false},
        {"α", "1_κ", "1_κα + 1_κ𝔔", "a", "t[k]:h0:1", "t[k]:h2:1 + Q*t[k]:h0:1", true},
        {"α", "1_κα", "1_κα𝔔", "a", "t[k]:h2:1", "Q*t[k]:h2:1", true},
    };
    return table;
}

/// The modeled lines instantiated at a torsion class: (left, right, expected).
struct TableInstance {
    const TableLine* line = nullptr;
    OrbifoldClass left{2};
    OrbifoldClass right{2};
    OrbifoldClass expected{2};
};

inline std::vector<TableInstance> g2_table_instances(const TorsionClass& k) {
    if (k.genus() != 2 || k.is_zero()) throw ContractViolation("table instances need a nonzero genus-2 class");
    const auto& t = g2_table();
    const OrbifoldClass a(2, alpha_poly());
    const SectorElement unit(k, 0, 1), top(k, 2, 1);
    const Polynomial& q = q_poly();
    return {
        {&t[0], a, a, OrbifoldClass(2, beta_poly() + Rational(4) * q)},
        {&t[1], a, OrbifoldClass(2, beta_poly()), OrbifoldClass(2, gamma_poly() + Rational(2) * alpha_poly() * q)},
        {&t[2], a, OrbifoldClass(2, gamma_poly()), OrbifoldClass(2, beta_poly() * q)},
        {&t[4], a, OrbifoldClass(unit), OrbifoldClass(top) + OrbifoldClass(unit, q)},
        {&t[5], a, OrbifoldClass(top), OrbifoldClass(top, q)},
    };
}

}  // namespace qorb
