#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qorb {

/// Ring variables in canonical order: alpha, beta, gamma and the quantum parameter.
enum class Var : std::uint8_t { alpha = 0, beta = 1, gamma = 2, q = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames{'a', 'b', 'g', 'Q'};
inline constexpr std::array<const char*, kNumVars> kUnicodeVarNames{"α", "β", "γ", "𝔔"};

inline constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

/// Algebraic degree of each variable. The weight of Q depends on context:
/// 2 for untwisted quantum relations, 1 for twisted alpha-products.
struct Weights {
    std::array<int, kNumVars> w{1, 2, 3, 2};

    constexpr int operator[](Var v) const { return w[index_of(v)]; }
    constexpr int operator[](std::size_t i) const { return w[i]; }
    friend constexpr bool operator==(const Weights&, const Weights&) = default;

    static constexpr Weights untwisted() { return {}; }
    static constexpr Weights twisted() { return Weights{{1, 2, 3, 1}}; }
};

/// Set of variables in play for a ring.
class VarSet {
public:
    constexpr VarSet() = default;
    constexpr VarSet(std::initializer_list<Var> vars) {
        for (Var v : vars) bits_ |= bit(v);
    }
    constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
    constexpr void insert(Var v) { bits_ |= bit(v); }
    constexpr bool includes(VarSet other) const { return (other.bits_ & ~bits_) == 0; }
    friend constexpr bool operator==(VarSet, VarSet) = default;

    static constexpr VarSet classical() { return {Var::alpha, Var::beta, Var::gamma}; }
    static constexpr VarSet quantum() { return {Var::alpha, Var::beta, Var::gamma, Var::q}; }

private:
    static constexpr std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1u << index_of(v)); }
    std::uint8_t bits_ = 0;
};

/// Exponent vector over (alpha, beta, gamma, Q). The built-in ordering is plain
/// lexicographic on the exponent tuple and is only used for storage.
struct Monomial {
    std::array<int, kNumVars> e{0, 0, 0, 0};

    constexpr Monomial() = default;
    constexpr Monomial(int a, int b, int g, int q) : e{a, b, g, q} {}

    static constexpr Monomial one() { return {}; }
    static constexpr Monomial of(Var v, int power = 1) {
        Monomial m;
        m.e[index_of(v)] = power;
        return m;
    }

    constexpr int operator[](Var v) const { return e[index_of(v)]; }
    constexpr int operator[](std::size_t i) const { return e[i]; }

    constexpr bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

    constexpr int degree(const Weights& w) const {
        int d = 0;
        for (std::size_t i = 0; i < kNumVars; ++i) d += e[i] * w[i];
        return d;
    }

    constexpr int total_exponent() const { return e[0] + e[1] + e[2] + e[3]; }

    constexpr VarSet support() const {
        VarSet s;
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (e[i] != 0) s.insert(static_cast<Var>(i));
        return s;
    }

    constexpr bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    /// Quotient other/this; requires divides(other).
    constexpr Monomial quotient_of(const Monomial& other) const {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = other.e[i] - e[i];
        return r;
    }

    constexpr Monomial without(Var v) const {
        Monomial r = *this;
        r.e[index_of(v)] = 0;
        return r;
    }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    friend constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend constexpr bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (a.e[i] != 0 && b.e[i] != 0) return false;
        return true;
    }

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Weighted graded reverse lexicographic order. `rank` lists the variables from
/// highest to lowest; ties in weighted degree are broken by looking at the
/// lowest-ranked variable first, the smaller exponent winning.
class MonomialOrder {
public:
    enum class Kind : std::uint8_t {
        /// gamma > beta > alpha > Q: standard monomials prefer powers of alpha,
        /// so normal forms in the invariant rings are polynomials in alpha (and Q).
        power_basis,
        /// alpha > beta > gamma > Q: plain grevlex, also the display order.
        grevlex,
    };

    constexpr MonomialOrder() : MonomialOrder(Kind::power_basis, Weights{}) {}
    constexpr MonomialOrder(Kind kind, Weights w) : kind_(kind), weights_(w) {
        if (kind == Kind::power_basis)
            rank_ = {Var::gamma, Var::beta, Var::alpha, Var::q};
        else
            rank_ = {Var::alpha, Var::beta, Var::gamma, Var::q};
    }

    constexpr Kind kind() const { return kind_; }
    constexpr const Weights& weights() const { return weights_; }

    /// Three-way comparison: positive when a > b.
    constexpr int compare(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(weights_);
        const int db = b.degree(weights_);
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t k = kNumVars; k-- > 0;) {
            const Var v = rank_[k];
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }

    constexpr bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend constexpr bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
        return x.kind_ == y.kind_ && x.weights_ == y.weights_;
    }

    std::string name() const { return kind_ == Kind::power_basis ? "power-basis" : "grevlex"; }

private:
    Kind kind_;
    Weights weights_;
    std::array<Var, kNumVars> rank_{};
};

/// Fixed order used for printing: grevlex alpha > beta > gamma > Q with deg Q = 2.
inline constexpr MonomialOrder display_order() {
    return MonomialOrder(MonomialOrder::Kind::grevlex, Weights{});
}

inline std::string to_string(const Monomial& m, bool unicode = false) {
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += '*';
        if (unicode)
            out += kUnicodeVarNames[i];
        else
            out += kVarNames[i];
        if (m.e[i] != 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace qorb
