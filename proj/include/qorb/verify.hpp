#pragma once

#include "consistency.hpp"
#include "expression.hpp"
#include "gw_oracle.hpp"
#include "json_io.hpp"

#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qorb {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void expect(const std::string& check, bool ok, const std::string& detail = {}) {
        results_.push_back({name_, check, ok, ok ? std::string() : detail});
    }

    template <class F>
    void guard(const std::string& check, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            results_.push_back({name_, check, false, std::string("exception: ") + e.what()});
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string name_;
    std::vector<CheckResult> results_;
};

/// Random polynomial in a, b, g of degree <= max_degree with small integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_degree);
    Polynomial p;
    const RingSpec spec = classical_ring_spec();
    for (int i = 0; i < terms; ++i) {
        const auto monos = monomials_of_degree(spec, deg(rng));
        if (monos.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], coeff(rng));
    }
    return p;
}

inline std::vector<Integer> closed_form_hilbert(int g) {
    SeriesPolynomial num = SeriesPolynomial::one_minus(g) * SeriesPolynomial::one_minus(g + 1) *
                           SeriesPolynomial::one_minus(g + 2);
    for (int w : {1, 2, 3}) num = *num.divide_one_minus(w);
    return num.coefficients();
}

inline std::vector<OrbifoldClass> check_generators(const ChenRuanAlgebra& a) {
    return a.genus() <= 3 ? a.basis() : default_export_generators(a);
}

inline std::vector<CheckResult> exact_algebra_suite(int g) {
    Suite s("exact-algebra");
    s.guard("normal form g=" + std::to_string(g), [&] {
        const InvariantRing ring(g);
        std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(g));
        bool idem = true, morph = true;
        for (int i = 0; i < 20; ++i) {
            const Polynomial p = random_polynomial(rng, 3 * g, 6), q = random_polynomial(rng, 3 * g, 6);
            const Polynomial np = ring.normal_form(p);
            idem = idem && ring.normal_form(np) == np;
            morph = morph && ring.normal_form(p * q) == ring.normal_form(np * ring.normal_form(q));
        }
        s.expect("normal_form idempotent g=" + std::to_string(g), idem);
        s.expect("normal_form multiplicative g=" + std::to_string(g), morph);
        const auto hs = ring.hilbert_series();
        const auto expected = closed_form_hilbert(g);
        s.expect("hilbert closed form g=" + std::to_string(g), hs.is_polynomial() && hs.numerator.coefficients() == expected,
                 "got " + to_string(hs));
        bool dims = true;
        for (int d = 0; d <= 3 * g; ++d) {
            const Integer want = d < static_cast<int>(expected.size()) ? expected[d] : Integer(0);
            dims = dims && Integer(static_cast<long>(ring.graded_basis(d).size())) == want;
        }
        s.expect("graded_basis matches hilbert g=" + std::to_string(g), dims);
    });
    return s.take();
}

inline std::vector<CheckResult> classical_suite(int g) {
    Suite s("classical-ring");
    s.guard("classical g=" + std::to_string(g), [&] {
        const auto t = classical_relations(g);
        bool degrees = true;
        for (int i = 0; i < 3; ++i) degrees = degrees && t.q[i].homogeneous_degree(Weights{}) == g + i;
        s.expect("relation degrees g=" + std::to_string(g), degrees);
        const InvariantRing ring(g);
        s.expect("top degree one-dimensional g=" + std::to_string(g),
                 ring.graded_basis(3 * g - 3).size() == 1 && ring.graded_basis(3 * g - 2).empty());
        bool nondegenerate = true;
        for (int d = 0; d <= 3 * g - 3; ++d) {
            const auto left = ring.graded_basis(d), right = ring.graded_basis(3 * g - 3 - d);
            Matrix m(left.size(), right.size());
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = 0; j < right.size(); ++j) m(i, j) = ring.pairing(Polynomial(left[i]), Polynomial(right[j]));
            nondegenerate = nondegenerate && left.size() == right.size() && m.rank() == left.size();
        }
        s.expect("pairing nondegenerate g=" + std::to_string(g), nondegenerate);
        s.expect("poincare palindromic g=" + std::to_string(g), full_poincare_polynomial(g).is_palindromic());
    });
    return s.take();
}

inline std::vector<CheckResult> sector_suite(int g) {
    Suite s("sector-algebra");
    s.guard("sectors g=" + std::to_string(g), [&] {
        Integer sum = 0;
        for (int k = 0; k <= 2 * (g - 1); k += 2) sum += sector_rank(g, k);
        s.expect("ranks sum to 2^(2g-3) g=" + std::to_string(g), sum == sector_total_rank(g));
        const auto classes = nonzero_torsion_classes(g);
        s.expect("2^(2g)-1 sectors g=" + std::to_string(g), Integer(static_cast<long>(classes.size())) == group_order(g) - 1);
        if (g <= 4) {
            bool counts = true, alternating = true;
            for (const auto& k : classes) {
                long n = 0;
                for (const auto& l : classes) n += weil_pairing(k, l);
                counts = counts && Integer(n) == pow2(2 * g - 1);
                alternating = alternating && weil_pairing(k, k) == 0;
            }
            s.expect("pairing partner count g=" + std::to_string(g), counts);
            s.expect("pairing alternating g=" + std::to_string(g), alternating);
        }
    });
    return s.take();
}

inline std::vector<CheckResult> chen_ruan_suite(int g) {
    Suite s("chen-ruan");
    s.guard("chen-ruan g=" + std::to_string(g), [&] {
        const ChenRuanAlgebra a(g);
        const auto gens = check_generators(a);
        bool graded = true, commutative = true, unit = true;
        const OrbifoldClass one = OrbifoldClass::unit(g);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            unit = unit && a.product(one, gens[i]) == gens[i] && a.product(gens[i], one) == gens[i];
            for (std::size_t j = i; j < gens.size(); ++j) {
                const auto xy = a.product(gens[i], gens[j]);
                if (i != j) commutative = commutative && xy == a.product(gens[j], gens[i]);
                if (!xy.is_zero()) graded = graded && real_degree(xy) == *real_degree(gens[i]) + *real_degree(gens[j]);
            }
        }
        s.expect("graded g=" + std::to_string(g), graded);
        s.expect("commutative g=" + std::to_string(g), commutative);
        s.expect("unit g=" + std::to_string(g), unit);
        s.expect("orbifold poincare palindromic g=" + std::to_string(g), cr_poincare_polynomial(g).is_palindromic());
        if (g == 2) {
            const auto basis = a.basis();
            Matrix m(basis.size(), basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = a.pairing(basis[i], basis[j]);
            s.expect("orbifold pairing nondegenerate g=2", m.rank() == basis.size());
        }
    });
    return s.take();
}

inline std::vector<CheckResult> quantum_suite(int g) {
    Suite s("quantum-orbifold");
    s.guard("quantum g=" + std::to_string(g), [&] {
        const auto t = quantum_relations(g);
        s.expect("Q=0 gives classical g=" + std::to_string(g), specialize_q_zero(t) == classical_relations(g));
        bool homogeneous = true;
        for (int i = 0; i < 3; ++i) homogeneous = homogeneous && t.q[i].homogeneous_degree(Weights{}) == g + i;
        s.expect("relations homogeneous g=" + std::to_string(g), homogeneous);
        const QuantumOrbifoldPresentation p(g);
        s.expect("classical limit g=" + std::to_string(g), classical_limit(p) == chen_ruan_presentation(p.chen_ruan()));
        const std::vector<OrbifoldClass> abc{OrbifoldClass(g, alpha_poly()), OrbifoldClass(g, beta_poly()),
                                             OrbifoldClass(g, gamma_poly())};
        bool assoc = true;
        for (const auto& x : abc)
            for (const auto& y : abc)
                for (const auto& z : abc) assoc = assoc && p.product(p.product(x, y), z) == p.product(x, p.product(y, z));
        s.expect("untwisted associativity g=" + std::to_string(g), assoc);
        bool audit = true;
        for (const auto& k : nonzero_torsion_classes(g)) {
            for (int sd = 0; sd <= 2 * (g - 1); sd += 2) {
                const SectorElement e(k, sd, 1);
                audit = audit && real_degree(twisted_alpha_product(e)) == e.real_degree() + 2;
            }
        }
        s.expect("I_quantum degree audit g=" + std::to_string(g), audit);
        if (g == 2) {
            const QuantumOrbifoldPresentation table(2, QuantumMode::table);
            bool lines = true;
            for (const auto& k : nonzero_torsion_classes(2))
                for (const auto& in : g2_table_instances(k)) lines = lines && table.product(in.left, in.right) == in.expected;
            s.expect("genus-2 table in table mode", lines);
        }
    });
    return s.take();
}

inline std::vector<CheckResult> gw_suite(int g) {
    Suite s("gw-oracle");
    s.guard("gw g=" + std::to_string(g), [&] {
        const int k = g - 1;
        s.expect("dim g", virtual_dim_M(g, 3, 1, {0, k, k}, true) == g);
        s.expect("dim g-1", virtual_dim_M(g, 2, 1, {k, k}, true) == g - 1);
        s.expect("dim g-2", virtual_dim_M(g, 0, 1, {k, k}) == g - 2);
        s.expect("dim 3g-1", virtual_dim_M(g, 3, 1, {0, 0, 0}) == 3 * g - 1);
        s.expect("extension ranks", extension_rank(StackyModel::PlainP1, g) == 2 * g &&
                                        extension_rank(StackyModel::P12, g) == g &&
                                        extension_rank(StackyModel::P22, g) == 0);
        s.expect("moduli dimensions", extension_moduli_dimension(StackyModel::PlainP1, g) == 3 * g - 1 &&
                                          extension_moduli_dimension(StackyModel::P22, g) == g);
        bool vanishing = true;
        for (int n1 = 0; n1 <= 3 * g; ++n1)
            for (int n2 = 0; n2 <= 3 * g; ++n2)
                if (n1 + 2 * n2 + 2 != 3 * g - 1) vanishing = vanishing && donaldson_evaluate(g, n1, n2) == 0;
        s.expect("donaldson degree vanishing g=" + std::to_string(g), vanishing);
        if (g == 2)
            s.expect("donaldson values g=2", donaldson_evaluate(2, 3, 0) == -32 && donaldson_evaluate(2, 1, 1) == 0);
    });
    return s.take();
}

inline std::vector<CheckResult> cli_suite(int g) {
    Suite s("cli");
    s.guard("parser and json g=" + std::to_string(g), [&] {
        const std::string bits = std::string("1") + std::string(2 * g - 1, '0');
        bool round = true;
        for (const std::string& text : std::vector<std::string>{"a^2*b + 8*Q", "-(a - b)*g^2", "3/4*a - -b", "t[" + bits + "]:h0:1*a + Q"}) {
            const auto e = parse(text, g);
            round = round && equal(*e, *parse(print(*e), g));
        }
        s.expect("parse/print round trip g=" + std::to_string(g), round);
        const std::string ring = canonical_dump(to_json(ring_document(InvariantRing(g))));
        const std::string quantum = canonical_dump(to_json(quantum_document(QuantumOrbifoldPresentation(g))));
        s.expect("json round trip g=" + std::to_string(g), reexport(ring) == ring && reexport(quantum) == quantum);
    });
    return s.take();
}

}  // namespace detail

/// Runs every suite for each genus in [min_genus, max_genus]; suites run concurrently.
inline std::vector<CheckResult> run_checks(int min_genus, int max_genus, bool parallel = true) {
    if (min_genus < 2 || max_genus < min_genus) throw ContractViolation("check: need 2 <= genus range");
    using SuiteFn = std::vector<CheckResult> (*)(int);
    const SuiteFn suites[] = {detail::exact_algebra_suite, detail::classical_suite, detail::sector_suite,
                              detail::chen_ruan_suite,     detail::quantum_suite,   detail::gw_suite,
                              detail::cli_suite};
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (int g = min_genus; g <= max_genus; ++g)
        for (SuiteFn f : suites) jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred, f, g));
    std::vector<CheckResult> out;
    for (auto& j : jobs) {
        auto r = j.get();
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}  // namespace qorb
