#pragma once

#include "groebner.hpp"
#include "univariate.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace qorb {

/// Level-r triple (q^1_r, q^2_r, q^3_r) of the cohomology recursion; degrees (r, r+1, r+2).
struct ClassicalRelationTriple {
    int level = 0;
    std::array<Polynomial, 3> q{Polynomial(1), Polynomial(), Polynomial()};

    friend bool operator==(const ClassicalRelationTriple&, const ClassicalRelationTriple&) = default;
};

/// Iterates q^1_{r+1} = a q^1_r + r^2 q^2_r, q^2_{r+1} = b q^1_r + 2r/(r+1) q^3_r,
/// q^3_{r+1} = g q^1_r from (1, 0, 0).
inline ClassicalRelationTriple classical_relations(int g) {
    if (g < 1) throw ContractViolation("classical_relations: genus must be at least 1");
    ClassicalRelationTriple t;
    for (int r = 0; r < g; ++r) {
        const auto& [q1, q2, q3] = t.q;
        Polynomial n1 = alpha_poly() * q1 + Rational(r * r) * q2;
        Polynomial n2 = beta_poly() * q1 + ratio(2 * r, r + 1) * q3;
        Polynomial n3 = gamma_poly() * q1;
        t.q = {std::move(n1), std::move(n2), std::move(n3)};
        t.level = r + 1;
    }
    return t;
}

inline std::vector<Polynomial> as_vector_triple(const ClassicalRelationTriple& t) { return {t.q[0], t.q[1], t.q[2]}; }

inline RingSpec classical_ring_spec(int degree_cap = 64) {
    return RingSpec{VarSet::classical(), MonomialOrder(MonomialOrder::Kind::power_basis, Weights{}), degree_cap};
}

/// The Sp-invariant ring Q[a, b, g] / I_g with a pairing on its top degree 3g - 3.
class InvariantRing {
public:
    explicit InvariantRing(int g, Rational normalization = 1, int degree_cap = 64)
        : genus_(check_genus(g)),
          ideal_(as_vector_triple(classical_relations(g)), classical_ring_spec(degree_cap)),
          normalization_(std::move(normalization)) {
        const auto top = ideal_.graded_basis(top_degree());
        if (top.empty()) throw std::logic_error("invariant ring has no top-degree class");
        top_monomial_ = *std::min_element(top.begin(), top.end());
    }

    int genus() const { return genus_; }
    int top_degree() const { return 3 * genus_ - 3; }
    const IdealPresentation& ideal() const { return ideal_; }
    const Rational& normalization() const { return normalization_; }
    /// Lexicographically least standard monomial of top degree; carries the normalization.
    const Monomial& top_monomial() const { return top_monomial_; }

    Polynomial normal_form(const Polynomial& p) const { return ideal_.normal_form(p); }
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const { return normal_form(a * b); }
    std::vector<Monomial> graded_basis(int d) const { return ideal_.graded_basis(d); }
    RationalSeries hilbert_series() const { return ideal_.hilbert_series(); }

    /// Pairing: normalization times the coefficient of the top monomial in NF(a b).
    Rational pairing(const Polynomial& a, const Polynomial& b) const {
        return normalization_ * multiply(a, b).coefficient(top_monomial_);
    }

private:
    static int check_genus(int g) {
        if (g < 2) throw ContractViolation("invariant ring needs genus >= 2");
        return g;
    }

    int genus_;
    IdealPresentation ideal_;
    Rational normalization_;
    Monomial top_monomial_;
};

inline InvariantRing invariant_ring(int g) { return InvariantRing(g); }

inline Rational poincare_pairing(const InvariantRing& ring, const Polynomial& a, const Polynomial& b) {
    return ring.pairing(a, b);
}

/// Dimension of the primitive part of the k-th exterior power of H^3: C(2g,k) - C(2g,k-2).
inline Integer primitive_exterior_dimension(int g, int k) { return binomial(2 * g, k) - binomial(2 * g, k - 2); }

/// Poincaré polynomial of H^*(M) in real degree:
/// sum_k dim(primitive k-forms) t^{3k} HS(Q[a,b,g]/I_{g-k})(t^2).
inline SeriesPolynomial full_poincare_polynomial(int g) {
    if (g < 2) throw ContractViolation("full_poincare_polynomial: genus must be at least 2");
    SeriesPolynomial total;
    for (int k = 0; k <= g - 1; ++k) {
        const int level = g - k;
        SeriesPolynomial factor;
        if (level == 1) {
            factor = SeriesPolynomial::monomial(0);  // I_1 = (a, b, g)
        } else {
            const RationalSeries hs = IdealPresentation(as_vector_triple(classical_relations(level)),
                                                        classical_ring_spec())
                                          .hilbert_series();
            if (!hs.is_polynomial()) throw std::logic_error("quotient by I_r is not finite-dimensional");
            factor = hs.numerator;
        }
        total += SeriesPolynomial::monomial(3 * k, primitive_exterior_dimension(g, k)) * factor.stretched(2);
    }
    return total;
}

}  // namespace qorb
