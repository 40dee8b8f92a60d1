// Acceptance run: one line per criterion, exact comparison, wall time against the budget.

#include "oracles.hpp"

#include <qorb/qorb.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qorb;

namespace {

Polynomial from_oracle(const oracle::Poly& p) {
    Polynomial out;
    for (const auto& [e, c] : p) out.add_term(Monomial(e[0], e[1], e[2], e[3]), c);
    return out;
}

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) o.require(false, "over time budget");
    failures += !o.ok;
    std::printf("[%s] %2d %s (tolerance: exact; %.3fs", o.ok ? "PASS" : "FAIL", id, title, secs);
    if (budget_s > 0) std::printf(" of %.0fs", budget_s);
    std::printf(")%s%s\n", o.note.empty() ? "" : " -- ", o.note.c_str());
}

OrbifoldClass expected_shift(int g, const SectorElement& e, int d) {
    const int target = e.s + 2 * d;
    if (target > 2 * (g - 1)) return OrbifoldClass(g);
    const long rank = binomial(2 * (g - 1), target).get_si();
    return OrbifoldClass(SectorElement(e.kappa, target, static_cast<int>(std::min<long>(e.index, rank))));
}

}  // namespace

int main() {
    criterion(1, "classical recursion g=2 literal, g=3 hand expansion", 1, [](Outcome& o) {
        const auto t2 = classical_relations(2);
        o.require(t2.q[0] == parse_polynomial("a^2 + b") && t2.q[1] == parse_polynomial("a*b + g") &&
                      t2.q[2] == parse_polynomial("a*g"),
                  "g=2 triple");
        const auto t3 = classical_relations(3);
        const auto h = oracle::classical(3);
        for (int i = 0; i < 3; ++i) o.require(t3.q[i] == from_oracle(h[i]), "g=3 member " + std::to_string(i));
    });

    criterion(2, "Hilbert series of I_g for g=2..6 vs closed form and per-degree linear algebra", 30, [](Outcome& o) {
        for (int g = 2; g <= 6; ++g) {
            const auto hs = InvariantRing(g).hilbert_series();
            const int n = 3 * g + 2;
            const auto coeffs = hs.coefficients(n);
            const auto closed = oracle::closed_form_hilbert(g, n + 1);
            for (int d = 0; d <= n; ++d) {
                o.require(coeffs[d] == closed[d], "closed form g=" + std::to_string(g) + " d=" + std::to_string(d));
                o.require(coeffs[d] == oracle::quotient_dimension(g, d),
                          "linear algebra g=" + std::to_string(g) + " d=" + std::to_string(d));
            }
        }
    });

    criterion(3, "g=2 quotient basis {1,a,a^2,a^3}, Poincare 1+t^2+4t^3+t^4+t^6", 1, [](Outcome& o) {
        const InvariantRing ring(2);
        std::vector<Monomial> basis;
        for (int d = 0; d <= 6; ++d)
            for (const auto& m : ring.graded_basis(d)) basis.push_back(m);
        o.require(basis == std::vector<Monomial>{Monomial(), Monomial(1, 0, 0, 0), Monomial(2, 0, 0, 0), Monomial(3, 0, 0, 0)},
                  "quotient basis");
        o.require(ring.normal_form(parse_polynomial("a^3")) == parse_polynomial("a^3"), "normal_form(a^3)");
        o.require(ring.normal_form(parse_polynomial("a^4")).is_zero(), "normal_form(a^4)");
        o.require(to_string(full_poincare_polynomial(2)) == "1 + t^2 + 4t^3 + t^4 + t^6", "Poincare polynomial");
    });

    criterion(4, "sector ranks C(2(g-1),s), total 2^(2g-3), age g-1, integral 1/2^(2g), g=2..8", 1, [](Outcome& o) {
        for (int g = 2; g <= 8; ++g) {
            Integer total = 0;
            for (int s = 0; s <= 2 * (g - 1); s += 2) {
                o.require(sector_rank(g, s) == binomial(2 * (g - 1), s), "rank");
                total += sector_rank(g, s);
            }
            o.require(sector_total_rank(g) == pow2(2 * g - 3) && total == sector_total_rank(g), "total rank");
            const TorsionClass k = TorsionClass::basis(g, 2 * g);
            o.require(age(k) == g - 1, "age");
            o.require(sector_integral(g, {{SectorElement::top(k), 1}}) == Rational(1) / Rational(pow2(2 * g)), "integral");
            o.require(sector_integral(g, {{SectorElement::unit(k), 1}}) == 0, "integral below top");
        }
    });

    criterion(5, "Chen-Ruan case rules on the full generator set, g=2 and g=3", 10, [](Outcome& o) {
        for (int g = 2; g <= 3; ++g) {
            const ChenRuanAlgebra a(g);
            const OrbifoldClass al(g, alpha_poly()), be(g, beta_poly()), ga(g, gamma_poly());
            const auto classes = nonzero_torsion_classes(g);
            const Rational scale(pow2(2 * g - 2));
            for (const auto& k : classes) {
                for (const auto& e : sector_generators(k)) {
                    const OrbifoldClass x(e);
                    o.require(a.product(al, x) == expected_shift(g, e, 1), "alpha rule");
                    o.require(a.product(be, x) == expected_shift(g, e, 2), "beta rule");
                    o.require(a.product(ga, x) == expected_shift(g, e, 3), "gamma rule");
                    o.require(a.product(al, x).is_zero() == (e.s == 2 * (g - 1)), "alpha threshold");
                }
                for (const auto& l : classes) {
                    if (k == l) continue;
                    const auto xy = a.product(OrbifoldClass(SectorElement::unit(k)), OrbifoldClass(SectorElement::unit(l)));
                    const OrbifoldClass want = weil_pairing(k, l) == 1
                                                   ? OrbifoldClass(SectorElement::top(k + l), Polynomial(scale))
                                                   : OrbifoldClass(g);
                    o.require(xy == want, "case (4)");
                    if (g == 2) {
                        for (const auto& e : sector_generators(k))
                            for (const auto& f : sector_generators(l))
                                if (e.s + f.s > 0)
                                    o.require(a.product(OrbifoldClass(e), OrbifoldClass(f)).is_zero(), "case (4) otherwise");
                    }
                }
            }
            const auto gens = a.basis();
            const std::size_t limit = g == 2 ? gens.size() : 120;
            for (std::size_t i = 0; i < limit; ++i)
                for (std::size_t j = 0; j < limit; ++j) {
                    const auto xy = a.product(gens[i], gens[j]);
                    o.require(xy == a.product(gens[j], gens[i]), "commutative");
                    if (!xy.is_zero()) o.require(real_degree(xy) == *real_degree(gens[i]) + *real_degree(gens[j]), "graded");
                }
        }
    });

    criterion(6, "orbifold Poincare g=2 = 1+16t^2+4t^3+16t^4+t^6, palindromic g=2..4", 1, [](Outcome& o) {
        o.require(to_string(cr_poincare_polynomial(2)) == "1 + 16t^2 + 4t^3 + 16t^4 + t^6", "g=2 polynomial");
        for (int g = 2; g <= 4; ++g) {
            const auto p = cr_poincare_polynomial(g);
            o.require(p.is_palindromic(), "palindromic g=" + std::to_string(g));
            const auto ref = oracle::orbifold_poincare(g);
            for (int d = 0; d <= p.degree(); ++d) o.require(p[d] == ref[d], "oracle g=" + std::to_string(g));
        }
    });

    criterion(7, "quantum relations at Q=0 equal classical, homogeneous with deg Q=2, g=2..6", 1, [](Outcome& o) {
        for (int g = 2; g <= 6; ++g) {
            const auto t = quantum_relations(g);
            o.require(specialize_q_zero(t) == classical_relations(g), "Q=0 g=" + std::to_string(g));
            const auto ref = oracle::quantum(g);
            for (int i = 0; i < 3; ++i) {
                o.require(t.q[i] == from_oracle(ref[i]), "oracle g=" + std::to_string(g));
                o.require(t.q[i].homogeneous_degree(Weights{}) == g + i, "homogeneous g=" + std::to_string(g));
            }
        }
    });

    criterion(8, "g=2 table mode reproduces the five modeled table lines", 1, [](Outcome& o) {
        const QuantumOrbifoldPresentation p(2, QuantumMode::table);
        for (const auto& k : nonzero_torsion_classes(2))
            for (const auto& in : g2_table_instances(k))
                o.require(quantum_product(p, in.left, in.right) == in.expected, in.line->ascii_left + " * " + in.line->ascii_right);
    });

    criterion(9, "I_quantum identities for every even s and nonzero k, g=2,3,4, with degree audit", 0, [](Outcome& o) {
        for (int g = 2; g <= 4; ++g) {
            for (const auto& k : nonzero_torsion_classes(g)) {
                for (int s = 0; s <= 2 * (g - 1); s += 2) {
                    const SectorElement e(k, s, 1);
                    OrbifoldClass want(e, q_poly());
                    if (s < 2 * (g - 1)) want += OrbifoldClass(SectorElement(k, s + 2, 1));
                    const auto got = twisted_alpha_product(g, k, s);
                    o.require(got == want, "identity g=" + std::to_string(g) + " s=" + std::to_string(s));
                    o.require(real_degree(got, 2, 1) == e.real_degree() + 2, "degree audit");
                }
            }
        }
    });

    criterion(10, "untwisted quantum associativity on {a,b,g}^3, relations mode, g=2,3", 30, [](Outcome& o) {
        for (int g = 2; g <= 3; ++g) {
            const QuantumOrbifoldPresentation p(g);
            const std::vector<OrbifoldClass> abc{OrbifoldClass(g, alpha_poly()), OrbifoldClass(g, beta_poly()),
                                                 OrbifoldClass(g, gamma_poly())};
            for (const auto& x : abc)
                for (const auto& y : abc)
                    for (const auto& z : abc)
                        o.require(p.product(p.product(x, y), z) == p.product(x, p.product(y, z)), "g=" + std::to_string(g));
        }
    });

    criterion(11, "virtual dimensions g, g-1, g-2, 3g-1 and extension ranks (2g, g, 0)", 0, [](Outcome& o) {
        for (int g = 2; g <= 8; ++g) {
            const int k = g - 1;
            o.require(virtual_dim_M(g, 3, 1, {0, k, k}, true) == g, "dim g");
            o.require(virtual_dim_M(g, 2, 1, {k, k}, true) == g - 1, "dim g-1");
            o.require(virtual_dim_M(g, 0, 1, {k, k}) == g - 2, "dim g-2");
            o.require(virtual_dim_M(g, 3, 1, {0, 0, 0}) == 3 * g - 1, "dim 3g-1");
            o.require(extension_rank(StackyModel::PlainP1, g) == 2 * g && extension_rank(StackyModel::P12, g) == g &&
                          extension_rank(StackyModel::P22, g) == 0,
                      "extension ranks");
        }
    });

    criterion(12, "Donaldson evaluator (2,3,0) -> -32, (2,1,1) -> 0, degree violations -> 0", 1, [](Outcome& o) {
        o.require(donaldson_evaluate(2, 3, 0) == -32 && oracle::donaldson(2, 3, 0) == -32, "(2,3,0)");
        o.require(donaldson_evaluate(2, 1, 1) == 0 && oracle::donaldson(2, 1, 1) == 0, "(2,1,1)");
        for (int g = 1; g <= 5; ++g)
            for (int n1 = 0; n1 <= 3 * g; ++n1)
                for (int n2 = 0; n2 <= 3 * g; ++n2) {
                    const Rational v = donaldson_evaluate(g, n1, n2);
                    o.require(v == oracle::donaldson(g, n1, n2), "oracle grid");
                    if (n1 + 2 * n2 + 2 != 3 * g - 1) o.require(v == 0, "degree violation");
                }
    });

    criterion(13, "consistency report flags the three recorded discrepancies with locations", 0, [](Outcome& o) {
        const auto report = consistency_report();
        const std::vector<std::string> ids{"twisted-sector-count", "table-sign-convention", "recursion-missing-8Q"};
        for (const auto& id : ids) {
            bool found = false;
            for (const auto& d : report)
                if (d.id == id) found = d.flagged && d.confirmed && !d.location.empty() && !d.evidence.empty();
            o.require(found, id);
        }
        const auto checks = run_checks(2, 3);
        bool all = true;
        for (const auto& c : checks) all = all && c.passed;
        o.require(all, "check suites");
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
