#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qorb {

/// Element of the 2-torsion group (Z/2)^{2g}, stored as a bit vector b_1..b_{2g}
/// in a standard symplectic basis (e_i paired with e_{i+g}).
class TorsionClass {
public:
    static constexpr int kMaxGenus = 32;

    TorsionClass() = default;
    TorsionClass(int genus, std::uint64_t bits) : genus_(genus), bits_(bits) {
        if (genus < 1 || genus > kMaxGenus) throw ContractViolation("torsion class genus out of range");
        if (genus < kMaxGenus && (bits >> (2 * genus)) != 0) throw ContractViolation("torsion bits exceed 2g");
    }

    static TorsionClass zero(int genus) { return {genus, 0}; }
    /// Basis vector e_i, 1-based.
    static TorsionClass basis(int genus, int i) {
        if (i < 1 || i > 2 * genus) throw ContractViolation("basis index out of range");
        return {genus, std::uint64_t{1} << (i - 1)};
    }
    /// Parses the bit string "b1b2...b{2g}".
    static TorsionClass from_bits(int genus, const std::string& text) {
        if (static_cast<int>(text.size()) != 2 * genus)
            throw ContractViolation("torsion bit string must have length 2g = " + std::to_string(2 * genus));
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1')
                bits |= std::uint64_t{1} << i;
            else if (text[i] != '0')
                throw ContractViolation("torsion bit string must contain only 0 and 1");
        }
        return {genus, bits};
    }

    int genus() const { return genus_; }
    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool bit(int i) const { return ((bits_ >> (i - 1)) & 1u) != 0; }

    std::string bit_string() const {
        std::string s;
        for (int i = 1; i <= 2 * genus_; ++i) s += bit(i) ? '1' : '0';
        return s;
    }

    friend TorsionClass operator+(const TorsionClass& a, const TorsionClass& b) {
        if (a.genus_ != b.genus_) throw ContractViolation("torsion classes of different genus");
        return {a.genus_, a.bits_ ^ b.bits_};
    }

    friend auto operator<=>(const TorsionClass&, const TorsionClass&) = default;
    friend bool operator==(const TorsionClass&, const TorsionClass&) = default;

private:
    int genus_ = 1;
    std::uint64_t bits_ = 0;
};

/// Mod-2 intersection pairing: sum_i (x_i y_{i+g} + x_{i+g} y_i) mod 2.
inline int weil_pairing(const TorsionClass& x, const TorsionClass& y) {
    if (x.genus() != y.genus()) throw ContractViolation("weil_pairing: length mismatch");
    const int g = x.genus();
    const std::uint64_t low = (g == TorsionClass::kMaxGenus) ? ~std::uint32_t{0} : ((std::uint64_t{1} << g) - 1);
    const std::uint64_t xl = x.bits() & low, xh = (x.bits() >> g) & low;
    const std::uint64_t yl = y.bits() & low, yh = (y.bits() >> g) & low;
    return std::popcount((xl & yh) ^ (xh & yl)) & 1;
}

/// All 2^{2g} - 1 nonzero classes in increasing bit order.
inline std::vector<TorsionClass> nonzero_torsion_classes(int g) {
    if (g < 1 || g > 10) throw ContractViolation("enumeration limited to genus 1..10");
    std::vector<TorsionClass> out;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    out.reserve(n - 1);
    for (std::uint64_t b = 1; b < n; ++b) out.emplace_back(g, b);
    return out;
}

inline int top_sector_degree(int g) { return 2 * (g - 1); }

/// Number of generators of H^s of a twisted sector: C(2(g-1), s) for even s, 0 for odd s.
inline Integer sector_rank(int g, int s) {
    if (g < 2) throw ContractViolation("sector_rank: genus must be at least 2");
    if (s < 0 || s > top_sector_degree(g)) throw ContractViolation("sector_rank: degree out of range");
    if (s % 2 != 0) return 0;
    return binomial(2 * (g - 1), s);
}

/// Sum of the even ranks, 2^{2g-3}.
inline Integer sector_total_rank(int g) {
    if (g < 2) throw ContractViolation("sector_total_rank: genus must be at least 2");
    return pow2(2 * g - 3);
}

/// Degree-shifting number: 0 for the untwisted sector, g - 1 otherwise.
inline int age(const TorsionClass& k) { return k.is_zero() ? 0 : k.genus() - 1; }

inline Integer group_order(int g) { return pow2(2 * g); }

/// Generator 1_k h_s of a twisted sector: nonzero class, even degree s, index in [1, C(2(g-1), s)].
struct SectorElement {
    TorsionClass kappa;
    int s = 0;
    int index = 1;

    SectorElement() = default;
    SectorElement(TorsionClass k, int degree, int idx) : kappa(k), s(degree), index(idx) { validate(); }

    static SectorElement unit(const TorsionClass& k) { return {k, 0, 1}; }
    static SectorElement top(const TorsionClass& k) { return {k, top_sector_degree(k.genus()), 1}; }

    int genus() const { return kappa.genus(); }
    /// Real orbifold degree s + 2 age.
    int real_degree() const { return s + 2 * age(kappa); }
    /// Algebraic orbifold degree (g - 1) + s/2.
    int algebraic_degree() const { return real_degree() / 2; }

    void validate() const {
        const int g = kappa.genus();
        if (kappa.is_zero()) throw ContractViolation("sector element needs a nonzero torsion class");
        if (g < 2) throw ContractViolation("sector element needs genus >= 2");
        if (s % 2 != 0) throw ContractViolation("sector degree must be even");
        if (s < 0 || s > top_sector_degree(g)) throw ContractViolation("sector degree out of range");
        if (index < 1 || Integer(index) > sector_rank(g, s)) throw ContractViolation("sector index out of range");
    }

    friend auto operator<=>(const SectorElement&, const SectorElement&) = default;
    friend bool operator==(const SectorElement&, const SectorElement&) = default;
};

/// Text form t[b1..b2g]:h{s}:{index}.
inline std::string to_string(const SectorElement& e) {
    return "t[" + e.kappa.bit_string() + "]:h" + std::to_string(e.s) + ":" + std::to_string(e.index);
}

/// Every generator of one twisted sector, ordered by (s, index).
inline std::vector<SectorElement> sector_generators(const TorsionClass& k) {
    std::vector<SectorElement> out;
    const int g = k.genus();
    for (int s = 0; s <= top_sector_degree(g); s += 2) {
        const long r = sector_rank(g, s).get_si();
        for (int i = 1; i <= r; ++i) out.emplace_back(k, s, i);
    }
    return out;
}

/// Action of a restricted untwisted class of real degree `shift` on a sector generator.
/// Sector cohomology is modelled by opaque ranked generators, so the image is the
/// generator of degree s + shift with index truncated to the target rank; it is zero
/// past the top degree. Any two paths to the same degree agree because the binomial
/// ranks are unimodal.
inline std::optional<SectorElement> restrict_shift(const SectorElement& e, int shift) {
    const int target = e.s + shift;
    if (shift < 0 || shift % 2 != 0) throw ContractViolation("restriction shift must be even and non-negative");
    if (target > top_sector_degree(e.genus())) return std::nullopt;
    const long rank = sector_rank(e.genus(), target).get_si();
    return SectorElement(e.kappa, target, static_cast<int>(std::min<long>(e.index, rank)));
}

/// 1/|Gamma| times the coefficient of the top class; lower degrees integrate to zero.
inline Rational sector_integral(int g, const std::map<SectorElement, Rational>& element) {
    Rational total = 0;
    for (const auto& [e, c] : element) {
        if (e.genus() != g) throw ContractViolation("sector_integral: genus mismatch");
        if (e.s == top_sector_degree(g)) total += c;
    }
    return total / Rational(group_order(g));
}

}  // namespace qorb
