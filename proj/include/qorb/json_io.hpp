#pragma once

#include "expression.hpp"
#include "quantum.hpp"
#include "version.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qorb {

using Json = nlohmann::ordered_json;

/// Signed term list of a class: (term text, coefficient), where the term is a monomial,
/// a sector generator, or a monomial in Q times a sector generator.
inline std::vector<std::pair<std::string, Rational>> terms_of(const OrbifoldClass& x) {
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& [m, c] : x.untwisted().sorted_terms(display_order())) out.emplace_back(to_string(m), c);
    for (const auto& [e, coeff] : x.twisted()) {
        for (const auto& [m, c] : coeff.sorted_terms(display_order())) {
            const std::string prefix = m.is_one() ? std::string() : to_string(m) + "*";
            out.emplace_back(prefix + to_string(e), c);
        }
    }
    return out;
}

inline OrbifoldClass class_from_terms(int genus, const std::vector<std::pair<std::string, Rational>>& terms) {
    OrbifoldClass out(genus);
    for (const auto& [t, c] : terms) out += c * parse_class(t, genus);
    return out;
}

namespace detail {

inline Json rational_json(const Rational& q) { return fraction_string(q); }

inline Rational rational_from(const Json& j) {
    if (!j.is_string()) throw ContractViolation("expected a \"p/q\" string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json terms_json(const OrbifoldClass& x) {
    Json arr = Json::array();
    for (const auto& [t, c] : terms_of(x)) arr.push_back(Json::array({t, rational_json(c)}));
    return arr;
}

inline OrbifoldClass terms_from(int genus, const Json& j) {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2) throw ContractViolation("term entries are [term, coefficient]");
        terms.emplace_back(item[0].get<std::string>(), rational_from(item[1]));
    }
    return class_from_terms(genus, terms);
}

inline Json header(const std::string& kind, int genus) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["engine_version"] = kEngineVersion;
    j["kind"] = kind;
    j["genus"] = genus;
    return j;
}

inline int check_header(const Json& j, const std::string& kind) {
    if (!j.is_object()) throw ContractViolation("presentation JSON must be an object");
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
        throw ContractViolation("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
    if (j.value("kind", "") != kind) throw ContractViolation("expected kind \"" + kind + "\"");
    const int g = j.at("genus").get<int>();
    if (g < 2) throw ContractViolation("genus must be at least 2");
    return g;
}

}  // namespace detail

/// Classical invariant ring: generators with degrees, the relations q_g^i, Hilbert coefficients.
struct RingDocument {
    int genus = 2;
    std::vector<std::pair<std::string, int>> generators{{"a", 1}, {"b", 2}, {"g", 3}};
    std::vector<Polynomial> relations;
    std::vector<Integer> hilbert;
    Rational normalization = 1;
    Monomial top_monomial;

    friend bool operator==(const RingDocument&, const RingDocument&) = default;
};

inline RingDocument ring_document(const InvariantRing& ring) {
    RingDocument d;
    d.genus = ring.genus();
    d.relations = ring.ideal().generators();
    d.hilbert = ring.hilbert_series().numerator.coefficients();
    d.normalization = ring.normalization();
    d.top_monomial = ring.top_monomial();
    return d;
}

inline Json to_json(const RingDocument& d) {
    Json j = detail::header("ring", d.genus);
    Json gens = Json::array();
    for (const auto& [name, deg] : d.generators) gens.push_back(Json::array({name, deg}));
    j["generators"] = gens;
    Json rel = Json::array();
    for (const auto& r : d.relations) rel.push_back(to_string(r));
    j["relations"] = rel;
    Json h = Json::array();
    for (const auto& c : d.hilbert) h.push_back(detail::rational_json(Rational(c)));
    j["hilbert"] = h;
    j["pairing"] = {{"normalization", detail::rational_json(d.normalization)},
                    {"top_monomial", to_string(d.top_monomial)}};
    return j;
}

inline RingDocument ring_document_from_json(const Json& j) {
    RingDocument d;
    d.genus = detail::check_header(j, "ring");
    d.generators.clear();
    for (const auto& g : j.at("generators")) d.generators.emplace_back(g.at(0).get<std::string>(), g.at(1).get<int>());
    for (const auto& r : j.at("relations")) d.relations.push_back(parse_polynomial(r.get<std::string>(), d.genus));
    for (const auto& c : j.at("hilbert")) {
        const Rational q = detail::rational_from(c);
        if (q.get_den() != 1) throw ContractViolation("Hilbert coefficients must be integers");
        d.hilbert.push_back(q.get_num());
    }
    d.normalization = detail::rational_from(j.at("pairing").at("normalization"));
    const Polynomial top = parse_polynomial(j.at("pairing").at("top_monomial").get<std::string>(), d.genus);
    if (top.size() != 1 || top.begin()->second != 1) throw ContractViolation("top_monomial must be a monomial");
    d.top_monomial = top.begin()->first;
    return d;
}

/// Chen-Ruan structure constants over a generator set.
struct ChenRuanDocument {
    struct Entry {
        OrbifoldClass left{2}, right{2}, result{2};
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    int genus = 2;
    std::vector<Integer> poincare;
    std::vector<OrbifoldClass> generators;
    std::vector<Entry> products;

    friend bool operator==(const ChenRuanDocument&, const ChenRuanDocument&) = default;
};

/// Standard monomials of positive degree, then every generator of the sectors e_1, e_2 and
/// e_{g+1} (e_1 pairs to 1 with e_{g+1} and to 0 with e_2).
inline std::vector<OrbifoldClass> default_export_generators(const ChenRuanAlgebra& a) {
    const int g = a.genus();
    std::vector<OrbifoldClass> out;
    for (int d = 1; d <= a.ring().top_degree(); ++d)
        for (const auto& m : a.ring().graded_basis(d)) out.emplace_back(g, Polynomial(m));
    for (int i : {1, 2, g + 1})
        for (const auto& e : sector_generators(TorsionClass::basis(g, i))) out.emplace_back(e);
    return out;
}

inline ChenRuanDocument chen_ruan_document(const ChenRuanAlgebra& a, std::vector<OrbifoldClass> generators) {
    ChenRuanDocument d;
    d.genus = a.genus();
    d.poincare = cr_poincare_polynomial(a.genus()).coefficients();
    d.generators = std::move(generators);
    for (std::size_t i = 0; i < d.generators.size(); ++i)
        for (std::size_t j = i; j < d.generators.size(); ++j)
            d.products.push_back({d.generators[i], d.generators[j], a.product(d.generators[i], d.generators[j])});
    return d;
}

inline ChenRuanDocument chen_ruan_document(const ChenRuanAlgebra& a) {
    return chen_ruan_document(a, default_export_generators(a));
}

inline Json to_json(const ChenRuanDocument& d) {
    Json j = detail::header("chen-ruan", d.genus);
    Json p = Json::array();
    for (const auto& c : d.poincare) p.push_back(detail::rational_json(Rational(c)));
    j["poincare"] = p;
    Json gens = Json::array();
    for (const auto& x : d.generators) gens.push_back(to_string(x));
    j["generators"] = gens;
    Json prods = Json::array();
    for (const auto& e : d.products) {
        Json item;
        item["left"] = to_string(e.left);
        item["right"] = to_string(e.right);
        item["result"] = detail::terms_json(e.result);
        prods.push_back(item);
    }
    j["products"] = prods;
    return j;
}

inline ChenRuanDocument chen_ruan_document_from_json(const Json& j) {
    ChenRuanDocument d;
    d.genus = detail::check_header(j, "chen-ruan");
    for (const auto& c : j.at("poincare")) d.poincare.push_back(detail::rational_from(c).get_num());
    for (const auto& x : j.at("generators")) d.generators.push_back(parse_class(x.get<std::string>(), d.genus));
    for (const auto& item : j.at("products")) {
        d.products.push_back({parse_class(item.at("left").get<std::string>(), d.genus),
                              parse_class(item.at("right").get<std::string>(), d.genus),
                              detail::terms_from(d.genus, item.at("result"))});
    }
    return d;
}

/// Quantum presentation: the untwisted relations and the twisted a-products.
struct QuantumDocument {
    int genus = 2;
    QuantumMode mode = QuantumMode::relations;
    std::vector<Polynomial> relations;
    std::vector<TwistedAlphaRule> i_quantum;
    std::vector<SectorElement> i_quantum_lhs;

    friend bool operator==(const QuantumDocument&, const QuantumDocument&) = default;
};

inline QuantumDocument quantum_document(const QuantumOrbifoldPresentation& p) {
    QuantumDocument d;
    d.genus = p.genus();
    d.mode = p.mode();
    d.relations = p.relations();
    d.i_quantum = p.i_quantum();
    const TorsionClass k = TorsionClass::basis(p.genus(), 1);
    for (const auto& rule : d.i_quantum) d.i_quantum_lhs.emplace_back(k, rule.s, 1);
    return d;
}

inline Json to_json(const QuantumDocument& d) {
    Json j = detail::header("quantum", d.genus);
    j["mode"] = to_string(d.mode);
    Json rel = Json::array();
    for (const auto& r : d.relations) rel.push_back(to_string(r));
    j["quantum_relations"] = rel;
    Json iq = Json::array();
    for (std::size_t i = 0; i < d.i_quantum.size(); ++i) {
        Json item;
        item["s"] = d.i_quantum[i].s;
        item["lhs"] = "a*" + to_string(d.i_quantum_lhs[i]);
        item["rhs"] = to_string(d.i_quantum[i].rhs);
        iq.push_back(item);
    }
    j["i_quantum"] = iq;
    return j;
}

inline QuantumDocument quantum_document_from_json(const Json& j) {
    QuantumDocument d;
    d.genus = detail::check_header(j, "quantum");
    d.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& r : j.at("quantum_relations")) d.relations.push_back(parse_polynomial(r.get<std::string>(), d.genus));
    for (const auto& item : j.at("i_quantum")) {
        const int s = item.at("s").get<int>();
        const std::string lhs = item.at("lhs").get<std::string>();
        if (lhs.rfind("a*", 0) != 0) throw ContractViolation("i_quantum lhs must read a*<sector>");
        const OrbifoldClass e = parse_class(lhs.substr(2), d.genus);
        if (!e.untwisted().is_zero() || e.twisted().size() != 1 || e.twisted().begin()->second != Polynomial(1))
            throw ContractViolation("i_quantum lhs must name a single sector generator");
        d.i_quantum_lhs.push_back(e.twisted().begin()->first);
        d.i_quantum.push_back({s, parse_class(item.at("rhs").get<std::string>(), d.genus)});
    }
    return d;
}

/// Canonical serialized form: two-space indentation and a trailing newline.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

/// Parses any exported document and re-serializes it canonically.
inline std::string reexport(const std::string& text) {
    const Json j = Json::parse(text);
    const std::string kind = j.value("kind", "");
    if (kind == "ring") return canonical_dump(to_json(ring_document_from_json(j)));
    if (kind == "chen-ruan") return canonical_dump(to_json(chen_ruan_document_from_json(j)));
    if (kind == "quantum") return canonical_dump(to_json(quantum_document_from_json(j)));
    throw ContractViolation("unknown presentation kind \"" + kind + "\"");
}

}  // namespace qorb
