#include "qorb/qorb.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qorb;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct Options {
    bool unicode = false;
    bool no_cache = false;
    int degree_cap = 64;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_genus(int g) {
    if (g < 2) throw UsageError("--genus must be at least 2");
    if (g > 10) throw UsageError("--genus above 10 is not supported (sector enumeration limit)");
}

std::string join(const std::vector<Polynomial>& ps, bool unicode) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i], unicode);
    return out;
}

int cmd_relations(const Options& o, int g, bool quantum) {
    require_genus(g);
    if (quantum)
        std::cout << join(as_vector_triple(quantum_relations(g)), o.unicode) << "\n";
    else
        std::cout << join(as_vector_triple(classical_relations(g)), o.unicode) << "\n";
    return kOk;
}

int cmd_mul(const Options& o, int g, bool quantum, const std::string& mode, const std::vector<std::string>& exprs) {
    require_genus(g);
    if (exprs.size() != 2) throw UsageError("mul takes exactly two expressions");
    if (!mode.empty() || quantum) {
        const QuantumOrbifoldPresentation p(g, mode.empty() ? QuantumMode::relations : parse_mode(mode), o.degree_cap);
        const Multiplier mul = [&](const OrbifoldClass& x, const OrbifoldClass& y) { return p.product(x, y); };
        std::cout << to_string(p.product(parse_class(exprs[0], g, mul), parse_class(exprs[1], g, mul)), o.unicode) << "\n";
    } else {
        const ChenRuanAlgebra a(g);
        const Multiplier mul = [&](const OrbifoldClass& x, const OrbifoldClass& y) { return a.product(x, y); };
        std::cout << to_string(a.product(parse_class(exprs[0], g, mul), parse_class(exprs[1], g, mul)), o.unicode) << "\n";
    }
    return kOk;
}

int cmd_pair(int g, const std::string& normalization, const std::vector<std::string>& exprs) {
    require_genus(g);
    if (exprs.size() != 2) throw UsageError("pair takes exactly two expressions");
    const ChenRuanAlgebra a(g, normalization.empty() ? Rational(1) : parse_rational(normalization));
    const Multiplier mul = [&](const OrbifoldClass& x, const OrbifoldClass& y) { return a.product(x, y); };
    std::cout << fraction_string(a.pairing(parse_class(exprs[0], g, mul), parse_class(exprs[1], g, mul))) << "\n";
    return kOk;
}

int cmd_hilbert(const Options& o, int g, bool orbifold, bool invariant) {
    require_genus(g);
    if (orbifold && invariant) throw UsageError("--orbifold and --invariant are exclusive");
    if (invariant)
        std::cout << to_string(InvariantRing(g, 1, o.degree_cap).hilbert_series()) << "\n";
    else if (orbifold)
        std::cout << to_string(cr_poincare_polynomial(g)) << "\n";
    else
        std::cout << to_string(full_poincare_polynomial(g)) << "\n";
    return kOk;
}

int cmd_table(const Options& o, int g) {
    if (g != 2) throw UsageError("the quantum product table exists for genus 2 only");
    for (const auto& line : g2_table()) {
        if (o.unicode)
            std::cout << line.left << " ·𝔔 " << line.right << " = " << line.result << "\n";
        else
            std::cout << line.ascii_left << " * " << line.ascii_right << " = " << line.ascii_result << "\n";
    }
    const QuantumOrbifoldPresentation table(2, QuantumMode::table, o.degree_cap);
    long bad = 0;
    for (const auto& k : nonzero_torsion_classes(2))
        for (const auto& in : g2_table_instances(k)) bad += !(table.product(in.left, in.right) == in.expected);
    std::cout << (bad == 0 ? "table mode reproduces every modeled line for all 15 sectors" : "table mode MISMATCH")
              << "\n";
    return bad == 0 ? kOk : kFailure;
}

int cmd_donaldson(int g, int n1, int n2, int n3, const std::string& omega_top) {
    if (g < 1) throw UsageError("--genus must be positive");
    if (n1 < 0 || n2 < 0 || n3 < 0) throw UsageError("exponents must be non-negative");
    std::optional<Rational> top;
    if (!omega_top.empty()) top = parse_rational(omega_top);
    std::cout << "jacobian: " << fraction_string(donaldson_evaluate(g, n1, n2, n3, top)) << "\n";
    std::cout << "gw: " << fraction_string(donaldson_gw_side(g, n1, n2, n3, top)) << "\n";
    return kOk;
}

int cmd_check(int genus, int max_genus, bool serial) {
    int lo = 2, hi = 3;
    if (genus != 0) lo = hi = genus;
    if (max_genus != 0) hi = max_genus;
    if (genus != 0 && max_genus != 0) lo = genus;
    if (lo < 2 || hi < lo) throw UsageError("genus range must satisfy 2 <= genus <= max-genus");
    if (hi > 6) throw UsageError("check supports genus up to 6");
    const auto results = run_checks(lo, hi, !serial);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name;
        if (!r.passed && !r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        failed += !r.passed;
    }
    std::cout << "\nconsistency report\n";
    for (const auto& d : consistency_report()) {
        std::cout << (d.flagged ? "[FLAG] " : "[NOTE] ") << d.id << "\n"
                  << "  location: " << d.location << "\n"
                  << "  issue: " << d.description << "\n"
                  << "  evidence: " << d.evidence << (d.confirmed ? "" : " (not reproduced)") << "\n";
    }
    std::cout << "\n" << results.size() - failed << "/" << results.size() << " checks passed for genus " << lo
              << ".." << hi << "\n";
    return failed == 0 ? kOk : kFailure;
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

int cmd_export(const Options& o, int g, const std::string& format, const std::string& kind, const std::string& mode,
               const std::string& out) {
    require_genus(g);
    if (format != "json") throw UsageError("only --format json is supported");
    std::string text;
    if (kind == "ring")
        text = canonical_dump(to_json(ring_document(InvariantRing(g, 1, o.degree_cap))));
    else if (kind == "chen-ruan")
        text = canonical_dump(to_json(chen_ruan_document(ChenRuanAlgebra(g))));
    else if (kind == "quantum")
        text = canonical_dump(to_json(quantum_document(
            QuantumOrbifoldPresentation(g, mode.empty() ? QuantumMode::relations : parse_mode(mode), o.degree_cap))));
    else
        throw UsageError("--kind must be ring, chen-ruan or quantum");
    write_output(out, text);
    return kOk;
}

int cmd_import(const std::string& in, const std::string& out) {
    std::ifstream f(in, std::ios::binary);
    if (!f) throw UsageError("cannot read " + in);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string original = ss.str();
    const std::string canonical = reexport(original);
    write_output(out, canonical);
    if (canonical != original) {
        std::cerr << "note: input was not in canonical form\n";
        return kFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qorb: exact quantum orbifold cohomology of rank-2 moduli spaces"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--unicode", o.unicode, "print a, b, g, Q as Greek letters");
    app.add_flag("--no-cache", o.no_cache, "do not read or write the Groebner basis cache");
    app.add_option("--degree-cap", o.degree_cap, "Groebner degree cap")->check(CLI::PositiveNumber);

    int genus = 0, max_genus = 0, n1 = 0, n2 = 0, n3 = 0;
    bool quantum = false, orbifold = false, invariant = false, serial = false;
    std::string mode, format = "json", kind = "ring", out, in, omega_top, normalization;
    std::vector<std::string> exprs;

    auto* relations = app.add_subcommand("relations", "print the relations I_g or the quantum triple");
    relations->add_option("--genus", genus)->required();
    relations->add_flag("--quantum", quantum);

    auto* mul = app.add_subcommand("mul", "multiply two classes");
    mul->add_option("--genus", genus)->required();
    mul->add_flag("--quantum", quantum);
    mul->add_option("--mode", mode)->check(CLI::IsMember({"relations", "table"}));
    mul->add_option("exprs", exprs)->expected(2)->required();

    auto* pair = app.add_subcommand("pair", "orbifold Poincare pairing of two classes");
    pair->add_option("--genus", genus)->required();
    pair->add_option("--normalization", normalization, "value of the pairing on the top monomial");
    pair->add_option("exprs", exprs)->expected(2)->required();

    auto* hilbert = app.add_subcommand("hilbert", "Poincare polynomial (real degree) or Hilbert series");
    hilbert->add_option("--genus", genus)->required();
    hilbert->add_flag("--orbifold", orbifold, "Chen-Ruan Poincare polynomial");
    hilbert->add_flag("--invariant", invariant, "Hilbert series of Q[a,b,g]/I_g in algebraic degree");

    auto* table = app.add_subcommand("table", "the genus-2 quantum product table");
    table->add_option("--genus", genus)->required();

    auto* donaldson = app.add_subcommand("donaldson", "Jacobian-side Donaldson evaluation");
    donaldson->add_option("--genus", genus)->required();
    donaldson->add_option("--n1", n1)->required();
    donaldson->add_option("--n2", n2)->required();
    donaldson->add_option("--n3", n3);
    donaldson->add_option("--omega-top", omega_top, "integral of w^g over J (default g!)");

    auto* check = app.add_subcommand("check", "run the invariant suites and the consistency report");
    check->add_option("--genus", genus);
    check->add_option("--max-genus", max_genus);
    check->add_flag("--serial", serial, "run suites one after another");

    auto* exp = app.add_subcommand("export", "write a presentation as JSON");
    exp->add_option("--genus", genus)->required();
    exp->add_option("--format", format);
    exp->add_option("--kind", kind)->check(CLI::IsMember({"ring", "chen-ruan", "quantum"}));
    exp->add_option("--mode", mode)->check(CLI::IsMember({"relations", "table"}));
    exp->add_option("--out", out, "output path, - for stdout");

    auto* imp = app.add_subcommand("import", "re-read an exported JSON file and print its canonical form");
    imp->add_option("--in", in)->required();
    imp->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (!o.no_cache) {
        try {
            basis_store() = std::make_shared<DiskBasisStore>(DiskBasisStore::default_dir());
        } catch (const std::exception&) {
        }
    }

    try {
        if (*relations) return cmd_relations(o, genus, quantum);
        if (*mul) return cmd_mul(o, genus, quantum, mode, exprs);
        if (*pair) return cmd_pair(genus, normalization, exprs);
        if (*hilbert) return cmd_hilbert(o, genus, orbifold, invariant);
        if (*table) return cmd_table(o, genus);
        if (*donaldson) return cmd_donaldson(genus, n1, n2, n3, omega_top);
        if (*check) return cmd_check(genus, max_genus, serial);
        if (*exp) return cmd_export(o, genus, format, kind, mode, out);
        if (*imp) return cmd_import(in, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
