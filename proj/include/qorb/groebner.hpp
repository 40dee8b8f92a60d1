#pragma once

#include "errors.hpp"
#include "polynomial.hpp"
#include "univariate.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qorb {

/// Configuration of a polynomial ring: variables in play, monomial order (which
/// carries the grading weights) and the Gröbner degree cap.
struct RingSpec {
    VarSet vars = VarSet::classical();
    MonomialOrder order{};
    int degree_cap = 64;

    const Weights& weights() const { return order.weights(); }
};

/// All monomials in `vars` of weighted degree d, in descending `order`.
inline std::vector<Monomial> monomials_of_degree(const RingSpec& spec, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (spec.vars.contains(static_cast<Var>(i))) active.push_back(i);
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int remaining) {
        if (k == active.size()) {
            if (remaining == 0) out.push_back(m);
            return;
        }
        const std::size_t v = active[k];
        const int w = spec.weights()[v];
        for (int e = 0; e * w <= remaining; ++e) {
            m.e[v] = e;
            rec(k + 1, remaining - e * w);
        }
        m.e[v] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return spec.order.greater(a, b); });
    return out;
}

/// Optional persistent store for reduced bases, consulted by IdealPresentation.
/// Loaded bases are re-verified before use, so a stale store can only cost time.
class BasisStore {
public:
    virtual ~BasisStore() = default;
    virtual std::optional<std::vector<Polynomial>> load(const std::string& key) = 0;
    virtual void store(const std::string& key, const std::vector<Polynomial>& basis) = 0;
};

inline std::shared_ptr<BasisStore>& basis_store() {
    static std::shared_ptr<BasisStore> store;
    return store;
}

inline std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// An ideal together with its reduced Gröbner basis for a fixed ring spec.
/// Immutable once constructed; safe for concurrent reads.
class IdealPresentation {
public:
    IdealPresentation(std::vector<Polynomial> generators, RingSpec spec)
        : generators_(std::move(generators)), spec_(spec) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (spec_.vars.contains(static_cast<Var>(i)) && spec_.weights()[i] <= 0)
                throw ContractViolation("grading weights must be positive for variables in play");
        for (const auto& g : generators_) require_variables(g);
        const auto store = basis_store();
        if (store) {
            const std::string key = cache_key();
            if (auto cached = store->load(key); cached && adopt(std::move(*cached))) return;
            compute_basis();
            store->store(key, basis_);
        } else {
            compute_basis();
        }
    }

    const std::vector<Polynomial>& generators() const { return generators_; }
    /// Reduced Gröbner basis, monic, sorted by leading monomial (largest first).
    const std::vector<Polynomial>& basis() const { return basis_; }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    const RingSpec& spec() const { return spec_; }
    const Weights& weights() const { return spec_.weights(); }
    const MonomialOrder& order() const { return spec_.order; }

    bool is_standard(const Monomial& m) const {
        return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
    }

    Polynomial normal_form(const Polynomial& p) const {
        require_variables(p);
        return reduce(p, basis_, leads_);
    }

    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

    /// Standard monomials of weighted degree d.
    std::vector<Monomial> graded_basis(int d) const {
        std::vector<Monomial> out;
        for (const auto& m : monomials_of_degree(spec_, d))
            if (is_standard(m)) out.push_back(m);
        return out;
    }

    /// Hilbert series as numerator / prod(1 - t^{w_v}), reduced where possible.
    RationalSeries hilbert_series() const {
        for (const auto& g : generators_)
            if (!g.is_homogeneous(weights())) throw InhomogeneousIdeal(to_string(g));
        RationalSeries r;
        r.numerator = hilbert_numerator(leads_);
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (spec_.vars.contains(static_cast<Var>(i))) r.denominator_weights.push_back(weights()[i]);
        r.reduce();
        return r;
    }

private:
    void require_variables(const Polynomial& p) const {
        if (!spec_.vars.includes(p.variables()))
            throw ContractViolation("polynomial '" + to_string(p) + "' uses variables outside the ring");
    }

    Polynomial reduce(Polynomial f, const std::vector<Polynomial>& basis, const std::vector<Monomial>& leads) const {
        Polynomial remainder;
        while (!f.is_zero()) {
            const auto [lm, lc] = f.leading_term(spec_.order);
            std::size_t k = 0;
            while (k < leads.size() && !leads[k].divides(lm)) ++k;
            if (k < leads.size()) {
                f.add_scaled(basis[k], -lc, leads[k].quotient_of(lm));
            } else {
                remainder.add_term(lm, lc);
                f.add_term(lm, -lc);
            }
        }
        return remainder;
    }

    std::string cache_key() const {
        std::string text = spec_.order.name() + ";";
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (spec_.vars.contains(static_cast<Var>(i))) text += std::to_string(weights()[i]) + ",";
        for (const auto& g : generators_) text += ";" + to_string(g);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
        return spec_.order.name() + "-cap" + std::to_string(spec_.degree_cap) + "-n" +
               std::to_string(generators_.size()) + "-" + buf;
    }

    /// Accepts a stored basis only if it is monic, interreduced, satisfies Buchberger's
    /// criterion and contains every generator.
    bool adopt(std::vector<Polynomial> candidate) {
        std::vector<Monomial> leads;
        for (const auto& p : candidate) {
            if (p.is_zero()) return false;
            try {
                require_variables(p);
            } catch (const ContractViolation&) {
                return false;
            }
            const auto [lm, lc] = p.leading_term(spec_.order);
            if (lc != 1) return false;
            leads.push_back(lm);
        }
        for (std::size_t i = 0; i + 1 < leads.size(); ++i)
            if (!spec_.order.greater(leads[i], leads[i + 1])) return false;
        for (std::size_t i = 0; i < candidate.size(); ++i)
            for (const auto& [m, c] : candidate[i])
                for (std::size_t j = 0; j < leads.size(); ++j)
                    if ((j != i || m != leads[i]) && leads[j].divides(m)) return false;
        for (const auto& g : generators_)
            if (!reduce(g, candidate, leads).is_zero()) return false;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            for (std::size_t j = i + 1; j < candidate.size(); ++j) {
                if (coprime(leads[i], leads[j])) continue;
                const Monomial l = lcm(leads[i], leads[j]);
                Polynomial s = candidate[i] * leads[i].quotient_of(l);
                s.add_scaled(candidate[j], -1, leads[j].quotient_of(l));
                if (!reduce(std::move(s), candidate, leads).is_zero()) return false;
            }
        }
        basis_ = std::move(candidate);
        leads_ = std::move(leads);
        return true;
    }

    Polynomial monic(const Polynomial& p) const { return p * (1 / p.leading_term(spec_.order).second); }

    void compute_basis() {
        struct Pair {
            std::size_t i, j;
            Monomial lcm;
            int degree;
        };
        std::vector<Polynomial> g;
        std::vector<Monomial> lm;
        std::vector<Pair> pairs;

        auto add = [&](Polynomial p) {
            p = monic(p);
            const Monomial lead = p.leading_term(spec_.order).first;
            const std::size_t idx = g.size();
            for (std::size_t k = 0; k < idx; ++k) {
                if (coprime(lm[k], lead)) continue;
                const Monomial l = lcm(lm[k], lead);
                pairs.push_back({k, idx, l, l.degree(weights())});
            }
            g.push_back(std::move(p));
            lm.push_back(lead);
        };

        for (const auto& gen : generators_) {
            Polynomial r = reduce(gen, g, lm);
            if (!r.is_zero()) add(std::move(r));
        }
        while (!pairs.empty()) {
            auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
                if (a.degree != b.degree) return a.degree < b.degree;
                return spec_.order.greater(b.lcm, a.lcm);
            });
            const Pair pr = *best;
            pairs.erase(best);
            if (pr.degree > spec_.degree_cap) throw DegreeCapExceeded(pr.degree, spec_.degree_cap);
            Polynomial s = g[pr.i] * lm[pr.i].quotient_of(pr.lcm);
            s.add_scaled(g[pr.j], -1, lm[pr.j].quotient_of(pr.lcm));
            Polynomial r = reduce(std::move(s), g, lm);
            if (!r.is_zero()) add(std::move(r));
        }

        // Minimal basis: drop elements whose leading monomial is divisible by another's.
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
                if (i == j || !lm[j].divides(lm[i])) continue;
                redundant = lm[j] != lm[i] || j < i;
            }
            if (!redundant) keep.push_back(i);
        }
        std::sort(keep.begin(), keep.end(),
                  [&](std::size_t a, std::size_t b) { return spec_.order.greater(lm[a], lm[b]); });
        for (std::size_t i : keep) {
            basis_.push_back(g[i]);
            leads_.push_back(lm[i]);
        }
        // Interreduce tails.
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> other_leads;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (j == i) continue;
                others.push_back(basis_[j]);
                other_leads.push_back(leads_[j]);
            }
            Polynomial tail = basis_[i];
            tail.add_term(leads_[i], -1);
            basis_[i] = Polynomial(leads_[i]) + reduce(tail, others, other_leads);
        }
    }

    SeriesPolynomial hilbert_numerator(std::vector<Monomial> gens) const {
        // minimal generators only
        std::vector<Monomial> minimal;
        std::sort(gens.begin(), gens.end(),
                  [&](const Monomial& a, const Monomial& b) { return a.degree(weights()) < b.degree(weights()); });
        for (const auto& m : gens) {
            if (std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& x) { return x.divides(m); })) continue;
            minimal.push_back(m);
        }
        if (minimal.empty()) return SeriesPolynomial::monomial(0);
        bool pairwise_coprime = true;
        for (std::size_t i = 0; i < minimal.size() && pairwise_coprime; ++i)
            for (std::size_t j = i + 1; j < minimal.size() && pairwise_coprime; ++j)
                pairwise_coprime = coprime(minimal[i], minimal[j]);
        if (pairwise_coprime) {
            SeriesPolynomial r = SeriesPolynomial::monomial(0);
            for (const auto& m : minimal) r = r * SeriesPolynomial::one_minus(m.degree(weights()));
            return r;
        }
        // N(I + <m>) = N(I) - t^{deg m} N(I : m)
        const Monomial m = minimal.back();
        minimal.pop_back();
        std::vector<Monomial> colon;
        colon.reserve(minimal.size());
        for (const auto& x : minimal) colon.push_back(m.quotient_of(lcm(x, m)));
        return hilbert_numerator(minimal) -
               SeriesPolynomial::monomial(m.degree(weights())) * hilbert_numerator(std::move(colon));
    }

    std::vector<Polynomial> generators_;
    RingSpec spec_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> leads_;
};

inline IdealPresentation groebner(std::vector<Polynomial> generators, RingSpec spec = {}) {
    return IdealPresentation(std::move(generators), spec);
}

inline Polynomial normal_form(const Polynomial& p, const IdealPresentation& ideal) { return ideal.normal_form(p); }

inline std::vector<Monomial> graded_basis(const IdealPresentation& ideal, int d) { return ideal.graded_basis(d); }

inline RationalSeries hilbert_series(const IdealPresentation& ideal) { return ideal.hilbert_series(); }

}  // namespace qorb
