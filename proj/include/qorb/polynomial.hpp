#pragma once

#include "monomial.hpp"
#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qorb {

/// Sparse polynomial over Q in alpha, beta, gamma, Q. Zero coefficients are never stored,
/// so the zero polynomial is the empty map.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c) { add_term(Monomial::one(), c); }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Monomial& m, const Rational& c = 1) { add_term(m, c); }

    static Polynomial var(Var v, int power = 1) { return Polynomial(Monomial::of(v, power)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) {
            it->second.canonicalize();
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// this += c * m * p
    void add_scaled(const Polynomial& p, const Rational& c, const Monomial& m = Monomial::one()) {
        if (c == 0) return;
        for (const auto& [mono, coeff] : p.terms_) add_term(mono * m, coeff * c);
    }

    VarSet variables() const {
        VarSet s;
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < kNumVars; ++i)
                if (m.e[i] != 0) s.insert(static_cast<Var>(i));
        return s;
    }

    /// Weighted degree when every term has the same degree; nullopt otherwise (and for zero).
    std::optional<int> homogeneous_degree(const Weights& w) const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            const int dm = m.degree(w);
            if (d && *d != dm) return std::nullopt;
            d = dm;
        }
        return d;
    }

    bool is_homogeneous(const Weights& w) const { return is_zero() || homogeneous_degree(w).has_value(); }

    /// Terms sorted by `order`, largest first.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const {
        std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
        return out;
    }

    /// Leading monomial under `order`; requires a nonzero polynomial.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
        auto best = terms_.begin();
        for (auto it = std::next(best); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return *best;
    }

    /// Part of the polynomial of a single weighted degree.
    Polynomial component(int degree, const Weights& w) const {
        Polynomial out;
        for (const auto& [m, c] : terms_)
            if (m.degree(w) == degree) out.terms_.emplace(m, c);
        return out;
    }

    /// Substitute a scalar for one variable.
    Polynomial evaluate(Var v, const Rational& value) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Rational coeff = c * power(value, m[v]);
            out.add_term(m.without(v), coeff);
        }
        return out;
    }

    /// Substitute a polynomial for one variable.
    Polynomial substitute(Var v, const Polynomial& replacement) const;

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    friend Polynomial operator*(const Polynomial& a, const Monomial& m) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_) out.terms_.emplace(ma * m, ca);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

inline Polynomial pow(const Polynomial& p, int e) {
    Polynomial r = 1;
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

inline Polynomial Polynomial::substitute(Var v, const Polynomial& replacement) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(m.without(v), c);
        out += term * pow(replacement, m[v]);
    }
    return out;
}

namespace detail {
inline void append_signed(std::string& out, const Rational& c, const std::string& body, bool first) {
    const bool negative = c < 0;
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    const Rational mag = negative ? Rational(-c) : c;
    if (body.empty()) {
        out += short_string(mag);
    } else if (mag == 1) {
        out += body;
    } else {
        out += short_string(mag) + "*" + body;
    }
}
}  // namespace detail

/// Canonical text: terms in descending display order joined by " + " / " - ",
/// monomials as a^i*b^j*g^k*Q^l.
inline std::string to_string(const Polynomial& p, bool unicode = false) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(display_order())) {
        detail::append_signed(out, c, m.is_one() ? std::string() : to_string(m, unicode), first);
        first = false;
    }
    return out;
}

inline const Polynomial& alpha_poly() {
    static const Polynomial p = Polynomial::var(Var::alpha);
    return p;
}
inline const Polynomial& beta_poly() {
    static const Polynomial p = Polynomial::var(Var::beta);
    return p;
}
inline const Polynomial& gamma_poly() {
    static const Polynomial p = Polynomial::var(Var::gamma);
    return p;
}
inline const Polynomial& q_poly() {
    static const Polynomial p = Polynomial::var(Var::q);
    return p;
}

}  // namespace qorb
