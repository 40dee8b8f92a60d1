#pragma once

#include "polynomial.hpp"
#include "sector.hpp"

#include <map>
#include <optional>
#include <string>

namespace qorb {

/// Formal sum over the inertia components: an untwisted polynomial plus, for each
/// twisted generator, a coefficient. Coefficients are polynomials so that quantum
/// products can carry powers of Q; classical classes have constant coefficients.
class OrbifoldClass {
public:
    using Twisted = std::map<SectorElement, Polynomial>;

    explicit OrbifoldClass(int genus) : genus_(genus) {}
    OrbifoldClass(int genus, Polynomial untwisted) : genus_(genus), untwisted_(std::move(untwisted)) {}
    OrbifoldClass(const SectorElement& e, Polynomial coeff = Polynomial(1)) : genus_(e.genus()) {
        add_twisted(e, coeff);
    }

    static OrbifoldClass unit(int genus) { return {genus, Polynomial(1)}; }

    int genus() const { return genus_; }
    const Polynomial& untwisted() const { return untwisted_; }
    const Twisted& twisted() const { return twisted_; }

    bool is_zero() const { return untwisted_.is_zero() && twisted_.empty(); }
    bool is_untwisted() const { return twisted_.empty(); }

    Polynomial twisted_coefficient(const SectorElement& e) const {
        auto it = twisted_.find(e);
        return it == twisted_.end() ? Polynomial() : it->second;
    }

    void add_untwisted(const Polynomial& p) { untwisted_ += p; }

    void add_twisted(const SectorElement& e, const Polynomial& coeff) {
        if (e.genus() != genus_) throw ContractViolation("sector element genus does not match class genus");
        if (coeff.is_zero()) return;
        auto [it, inserted] = twisted_.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) twisted_.erase(it);
        }
    }

    OrbifoldClass& operator+=(const OrbifoldClass& o) {
        require_same_genus(o);
        untwisted_ += o.untwisted_;
        for (const auto& [e, c] : o.twisted_) add_twisted(e, c);
        return *this;
    }
    OrbifoldClass& operator-=(const OrbifoldClass& o) {
        require_same_genus(o);
        untwisted_ -= o.untwisted_;
        for (const auto& [e, c] : o.twisted_) add_twisted(e, -c);
        return *this;
    }
    /// Multiply every coefficient by a polynomial (a scalar or a power of Q).
    OrbifoldClass& scale(const Polynomial& p) {
        untwisted_ = untwisted_ * p;
        Twisted scaled;
        for (const auto& [e, c] : twisted_) {
            Polynomial n = c * p;
            if (!n.is_zero()) scaled.emplace(e, std::move(n));
        }
        twisted_ = std::move(scaled);
        return *this;
    }

    friend OrbifoldClass operator+(OrbifoldClass a, const OrbifoldClass& b) { return a += b; }
    friend OrbifoldClass operator-(OrbifoldClass a, const OrbifoldClass& b) { return a -= b; }
    friend OrbifoldClass operator*(const Polynomial& p, OrbifoldClass a) { return a.scale(p); }
    friend OrbifoldClass operator*(const Rational& s, OrbifoldClass a) { return a.scale(Polynomial(s)); }
    OrbifoldClass operator-() const { return Rational(-1) * *this; }

    /// Substitute a scalar for one variable in every coefficient.
    OrbifoldClass evaluate(Var v, const Rational& value) const {
        OrbifoldClass out(genus_, untwisted_.evaluate(v, value));
        for (const auto& [e, c] : twisted_) out.add_twisted(e, c.evaluate(v, value));
        return out;
    }

    friend bool operator==(const OrbifoldClass&, const OrbifoldClass&) = default;

    void require_same_genus(const OrbifoldClass& o) const {
        if (o.genus_ != genus_) throw ContractViolation("genus mismatch between orbifold classes");
    }

private:
    int genus_;
    Polynomial untwisted_;
    Twisted twisted_;
};

/// Real degree of a homogeneous class (nullopt for zero or mixed degree). Q counts
/// with weight `q_weight_untwisted` on the untwisted part and `q_weight_twisted` in
/// twisted coefficients.
inline std::optional<int> real_degree(const OrbifoldClass& x, int q_weight_untwisted = 2, int q_weight_twisted = 1) {
    std::optional<int> d;
    auto merge = [&](int v) {
        if (d && *d != v) return false;
        d = v;
        return true;
    };
    const Weights wu{{1, 2, 3, q_weight_untwisted}};
    const Weights wt{{1, 2, 3, q_weight_twisted}};
    for (const auto& [m, c] : x.untwisted())
        if (!merge(2 * m.degree(wu))) return std::nullopt;
    for (const auto& [e, coeff] : x.twisted())
        for (const auto& [m, c] : coeff)
            if (!merge(e.real_degree() + 2 * m.degree(wt))) return std::nullopt;
    return d;
}

namespace detail {
inline std::string coefficient_prefix(const Polynomial& c, bool unicode, bool& negative) {
    negative = false;
    if (c.size() == 1) {
        const auto& [m, q] = *c.begin();
        negative = q < 0;
        const Rational mag = negative ? Rational(-q) : q;
        std::string body = m.is_one() ? std::string() : to_string(m, unicode);
        if (mag == 1) return body.empty() ? std::string() : body + "*";
        return short_string(mag) + "*" + (body.empty() ? std::string() : body + "*");
    }
    return "(" + to_string(c, unicode) + ")*";
}
}  // namespace detail

/// Canonical text: untwisted polynomial first, then twisted terms by generator order.
inline std::string to_string(const OrbifoldClass& x, bool unicode = false) {
    if (x.is_zero()) return "0";
    std::string out = x.untwisted().is_zero() ? std::string() : to_string(x.untwisted(), unicode);
    for (const auto& [e, c] : x.twisted()) {
        bool negative = false;
        const std::string prefix = detail::coefficient_prefix(c, unicode, negative);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += prefix + to_string(e);
    }
    return out;
}

}  // namespace qorb
