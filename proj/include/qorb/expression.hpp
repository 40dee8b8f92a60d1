#pragma once

#include "errors.hpp"
#include "orbifold_class.hpp"

#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qorb {

/// Expression tree over rational literals, the variables a, b, g, Q, sector atoms
/// t[bits]:h{s}:{index}, and + - * ^ with unary minus.
struct Expr {
    enum class Kind { number, variable, sector, add, sub, mul, neg, pow };

    Kind kind = Kind::number;
    Rational value;             // number
    Var var = Var::alpha;       // variable
    SectorElement sector;       // sector
    int exponent = 0;           // pow
    std::shared_ptr<const Expr> lhs, rhs;  // rhs unused for neg and pow

    static std::shared_ptr<const Expr> number(Rational v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::number;
        e->value = std::move(v);
        return e;
    }
    static std::shared_ptr<const Expr> variable(Var v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::variable;
        e->var = v;
        return e;
    }
    static std::shared_ptr<const Expr> sector_atom(const SectorElement& s) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::sector;
        e->sector = s;
        return e;
    }
    static std::shared_ptr<const Expr> binary(Kind k, std::shared_ptr<const Expr> l, std::shared_ptr<const Expr> r) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }
    static std::shared_ptr<const Expr> negate(std::shared_ptr<const Expr> x) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::neg;
        e->lhs = std::move(x);
        return e;
    }
    static std::shared_ptr<const Expr> power(std::shared_ptr<const Expr> base, int n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::pow;
        e->lhs = std::move(base);
        e->exponent = n;
        return e;
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

inline bool equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::number: return x.value == y.value;
        case Expr::Kind::variable: return x.var == y.var;
        case Expr::Kind::sector: return x.sector == y.sector;
        case Expr::Kind::neg: return equal(*x.lhs, *y.lhs);
        case Expr::Kind::pow: return x.exponent == y.exponent && equal(*x.lhs, *y.lhs);
        default: return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
    }
}

namespace detail {

class Parser {
public:
    Parser(std::string_view text, int genus) : s_(text), genus_(genus) {}

    ExprPtr parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression", {"expression"});
        ExprPtr e = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'", {"+", "-", "*", "^", "end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
        throw ParseError(pos_, message, std::move(expected));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(pos_ < s_.size() ? std::string("unexpected '") + s_[pos_] + "'" : "unexpected end of input",
                              {std::string("'") + c + "'"});
        ++pos_;
    }

    // expr := term (('+' | '-') term)*
    ExprPtr expr() {
        ExprPtr e = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            e = Expr::binary(c == '+' ? Expr::Kind::add : Expr::Kind::sub, e, term());
        }
        return e;
    }

    // term := unary ('*' unary)*
    ExprPtr term() {
        ExprPtr e = unary();
        while (peek() == '*') {
            ++pos_;
            e = Expr::binary(Expr::Kind::mul, e, unary());
        }
        return e;
    }

    // unary := '-' unary | power
    ExprPtr unary() {
        if (peek() == '-') {
            ++pos_;
            return Expr::negate(unary());
        }
        return power();
    }

    // power := atom ('^' integer)?
    ExprPtr power() {
        ExprPtr base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("exponent must be a non-negative integer", {"integer"});
        const std::size_t start = pos_;
        const std::string digits = read_digits();
        if (digits.size() > 6) {
            pos_ = start;
            fail("exponent too large", {"integer below 10^6"});
        }
        return Expr::power(base, std::stoi(digits));
    }

    // atom := rational | a | b | g | Q | sector | '(' expr ')'
    ExprPtr atom() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (name == "a") return Expr::variable(Var::alpha);
            if (name == "b") return Expr::variable(Var::beta);
            if (name == "g") return Expr::variable(Var::gamma);
            if (name == "Q") return Expr::variable(Var::q);
            if (name == "t") return sector(start);
            pos_ = start;
            fail("unknown identifier '" + name + "'", atom_starts());
        }
        if (c == '\0') fail("unexpected end of input", atom_starts());
        fail(std::string("unexpected '") + c + "'", atom_starts());
    }

    static std::vector<std::string> atom_starts() { return {"number", "a", "b", "g", "Q", "t[", "(", "-"}; }

    std::string read_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    // rational := digits ('/' digits)?   (no whitespace inside the literal)
    ExprPtr number() {
        const std::size_t start = pos_;
        std::string text = read_digits();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("denominator must be digits", {"integer"});
            const std::string den = read_digits();
            if (den.find_first_not_of('0') == std::string::npos) {
                pos_ = start;
                fail("zero denominator");
            }
            text += "/" + den;
        }
        return Expr::number(parse_rational(text));
    }

    // sector := 't' '[' bits ']' (':' 'h' digits ':' digits)?
    ExprPtr sector(std::size_t start) {
        if (pos_ >= s_.size() || s_[pos_] != '[') fail("sector atom needs a bit string", {"'['"});
        ++pos_;
        const std::size_t bits_at = pos_;
        std::string bits;
        while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) bits += s_[pos_++];
        if (pos_ >= s_.size() || s_[pos_] != ']') fail("bit strings contain only 0 and 1", {"0", "1", "']'"});
        if (static_cast<int>(bits.size()) != 2 * genus_) {
            pos_ = bits_at;
            fail("bit string has length " + std::to_string(bits.size()) + ", genus " + std::to_string(genus_) +
                 " needs " + std::to_string(2 * genus_));
        }
        ++pos_;
        const TorsionClass k = TorsionClass::from_bits(genus_, bits);
        if (k.is_zero()) {
            pos_ = start;
            fail("sector atoms need a nonzero torsion class; write 1 for the untwisted unit");
        }
        int s = 0, index = 1;
        if (pos_ < s_.size() && s_[pos_] == ':') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] != 'h') fail("sector degree must start with h", {"'h'"});
            ++pos_;
            const std::size_t s_at = pos_;
            const std::string sd = read_digits();
            if (sd.empty() || sd.size() > 4) fail("sector degree must be a small integer", {"integer"});
            s = std::stoi(sd);
            if (s % 2 != 0) {
                pos_ = s_at;
                fail("sector degree must be even");
            }
            if (s > 2 * (genus_ - 1)) {
                pos_ = s_at;
                fail("sector degree exceeds " + std::to_string(2 * (genus_ - 1)));
            }
            if (pos_ >= s_.size() || s_[pos_] != ':') fail("sector index missing", {"':'"});
            ++pos_;
            const std::size_t i_at = pos_;
            const std::string id = read_digits();
            if (id.empty() || id.size() > 9) fail("sector index must be a positive integer", {"integer"});
            index = std::stoi(id);
            if (index < 1 || Integer(index) > sector_rank(genus_, s)) {
                pos_ = i_at;
                fail("sector index out of range 1.." + sector_rank(genus_, s).get_str());
            }
        }
        return Expr::sector_atom(SectorElement(k, s, index));
    }

    std::string_view s_;
    int genus_;
    std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

inline void print(const Expr& e, std::string& out, bool unicode);

inline void print_at(const Expr& e, int min_prec, std::string& out, bool unicode) {
    const bool paren = precedence(e) < min_prec;
    if (paren) out += '(';
    print(e, out, unicode);
    if (paren) out += ')';
}

inline void print(const Expr& e, std::string& out, bool unicode) {
    switch (e.kind) {
        case Expr::Kind::number: out += short_string(e.value); break;
        case Expr::Kind::variable:
            out += unicode ? kUnicodeVarNames[index_of(e.var)] : std::string(1, kVarNames[index_of(e.var)]);
            break;
        case Expr::Kind::sector: out += to_string(e.sector); break;
        case Expr::Kind::add:
        case Expr::Kind::sub:
            print_at(*e.lhs, 1, out, unicode);
            out += e.kind == Expr::Kind::add ? " + " : " - ";
            print_at(*e.rhs, 2, out, unicode);
            break;
        case Expr::Kind::mul:
            print_at(*e.lhs, 2, out, unicode);
            out += '*';
            print_at(*e.rhs, 3, out, unicode);
            break;
        case Expr::Kind::neg:
            out += '-';
            print_at(*e.lhs, 3, out, unicode);
            break;
        case Expr::Kind::pow:
            print_at(*e.lhs, 5, out, unicode);
            out += '^' + std::to_string(e.exponent);
            break;
    }
}

}  // namespace detail

inline ExprPtr parse(std::string_view text, int genus) {
    if (genus < 2) throw ContractViolation("parse: genus must be at least 2");
    return detail::Parser(text, genus).parse();
}

/// Canonical text with minimal parentheses; parsing it gives back an equal tree.
inline std::string print(const Expr& e, bool unicode = false) {
    std::string out;
    detail::print(e, out, unicode);
    return out;
}

using Multiplier = std::function<OrbifoldClass(const OrbifoldClass&, const OrbifoldClass&)>;

/// Formal product: polynomials multiply, a polynomial times a twisted generator becomes
/// its coefficient. Two twisted factors need a ring.
inline OrbifoldClass formal_product(const OrbifoldClass& x, const OrbifoldClass& y) {
    x.require_same_genus(y);
    if (!x.is_untwisted() && !y.is_untwisted())
        throw ContractViolation("product of twisted classes needs a ring; use mul");
    OrbifoldClass out(x.genus(), x.untwisted() * y.untwisted());
    for (const auto& [e, c] : y.twisted()) out.add_twisted(e, c * x.untwisted());
    for (const auto& [e, c] : x.twisted()) out.add_twisted(e, c * y.untwisted());
    return out;
}

inline OrbifoldClass evaluate(const Expr& e, int genus, const Multiplier& mul = formal_product) {
    switch (e.kind) {
        case Expr::Kind::number: return OrbifoldClass(genus, Polynomial(e.value));
        case Expr::Kind::variable: return OrbifoldClass(genus, Polynomial::var(e.var));
        case Expr::Kind::sector: return OrbifoldClass(e.sector);
        case Expr::Kind::add: return evaluate(*e.lhs, genus, mul) + evaluate(*e.rhs, genus, mul);
        case Expr::Kind::sub: return evaluate(*e.lhs, genus, mul) - evaluate(*e.rhs, genus, mul);
        case Expr::Kind::mul: return mul(evaluate(*e.lhs, genus, mul), evaluate(*e.rhs, genus, mul));
        case Expr::Kind::neg: return -evaluate(*e.lhs, genus, mul);
        case Expr::Kind::pow: {
            const OrbifoldClass base = evaluate(*e.lhs, genus, mul);
            OrbifoldClass r = OrbifoldClass::unit(genus);
            for (int i = 0; i < e.exponent; ++i) r = mul(r, base);
            return r;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

inline OrbifoldClass parse_class(std::string_view text, int genus, const Multiplier& mul = formal_product) {
    return evaluate(*parse(text, genus), genus, mul);
}

/// Parses a polynomial in a, b, g, Q; sector atoms are rejected.
inline Polynomial parse_polynomial(std::string_view text, int genus = 2) {
    const OrbifoldClass c = parse_class(text, genus);
    if (!c.is_untwisted()) throw ContractViolation("expected a polynomial without sector atoms");
    return c.untwisted();
}

}  // namespace qorb
