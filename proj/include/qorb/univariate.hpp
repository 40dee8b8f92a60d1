#pragma once

#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qorb {

/// Dense polynomial in one variable t with integer coefficients; coeffs[d] is the
/// coefficient of t^d. Trailing zeros are trimmed.
class SeriesPolynomial {
public:
    SeriesPolynomial() = default;
    explicit SeriesPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static SeriesPolynomial monomial(int degree, const Integer& coeff = 1) {
        std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, 0);
        c.back() = coeff;
        return SeriesPolynomial(std::move(c));
    }
    /// 1 - t^w
    static SeriesPolynomial one_minus(int w) {
        std::vector<Integer> c(static_cast<std::size_t>(w) + 1, 0);
        c[0] = 1;
        c[static_cast<std::size_t>(w)] -= 1;
        return SeriesPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return c_; }
    Integer operator[](int d) const {
        return (d < 0 || d >= static_cast<int>(c_.size())) ? Integer(0) : c_[static_cast<std::size_t>(d)];
    }

    /// p(t^k)
    SeriesPolynomial stretched(int k) const {
        if (is_zero()) return {};
        std::vector<Integer> c(static_cast<std::size_t>(degree() * k) + 1, 0);
        for (std::size_t d = 0; d < c_.size(); ++d) c[d * static_cast<std::size_t>(k)] = c_[d];
        return SeriesPolynomial(std::move(c));
    }

    bool is_palindromic() const {
        for (int d = 0; d <= degree(); ++d)
            if ((*this)[d] != (*this)[degree() - d]) return false;
        return true;
    }

    SeriesPolynomial& operator+=(const SeriesPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
        trim();
        return *this;
    }
    SeriesPolynomial& operator-=(const SeriesPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
        trim();
        return *this;
    }
    friend SeriesPolynomial operator+(SeriesPolynomial a, const SeriesPolynomial& b) { return a += b; }
    friend SeriesPolynomial operator-(SeriesPolynomial a, const SeriesPolynomial& b) { return a -= b; }
    friend SeriesPolynomial operator*(const SeriesPolynomial& a, const SeriesPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return SeriesPolynomial(std::move(c));
    }
    friend SeriesPolynomial operator*(const Integer& s, SeriesPolynomial a) {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const SeriesPolynomial&, const SeriesPolynomial&) = default;

    /// Exact quotient by (1 - t^w), or nullopt if it does not divide.
    std::optional<SeriesPolynomial> divide_one_minus(int w) const {
        if (is_zero()) return SeriesPolynomial{};
        // p = (1 - t^w) q  <=>  q[d] = p[d] + q[d - w]
        const int qdeg = degree() - w;
        if (qdeg < 0) return std::nullopt;
        std::vector<Integer> q(static_cast<std::size_t>(qdeg) + 1, 0);
        for (int d = 0; d <= qdeg; ++d)
            q[static_cast<std::size_t>(d)] = (*this)[d] + (d >= w ? q[static_cast<std::size_t>(d - w)] : Integer(0));
        SeriesPolynomial candidate(std::move(q));
        if (candidate * one_minus(w) != *this) return std::nullopt;
        return candidate;
    }

    /// Power-series coefficients of this / prod(1 - t^w) up to t^max_degree.
    std::vector<Integer> expand_over(const std::vector<int>& denominator_weights, int max_degree) const {
        std::vector<Integer> s(static_cast<std::size_t>(max_degree) + 1, 0);
        for (int d = 0; d <= max_degree; ++d) s[static_cast<std::size_t>(d)] = (*this)[d];
        for (int w : denominator_weights)
            for (int d = w; d <= max_degree; ++d) s[static_cast<std::size_t>(d)] += s[static_cast<std::size_t>(d - w)];
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// Renders e.g. "1 + 16t^2 + 4t^3 + 16t^4 + t^6".
inline std::string to_string(const SeriesPolynomial& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = 0; d <= p.degree(); ++d) {
        const Integer c = p[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (d == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str();
        out += var;
        if (d != 1) out += "^" + std::to_string(d);
    }
    return out;
}

/// numerator / prod_i (1 - t^{w_i}); an empty weight list means a polynomial.
struct RationalSeries {
    SeriesPolynomial numerator;
    std::vector<int> denominator_weights;

    bool is_polynomial() const { return denominator_weights.empty(); }

    SeriesPolynomial denominator() const {
        SeriesPolynomial d = SeriesPolynomial::monomial(0);
        for (int w : denominator_weights) d = d * SeriesPolynomial::one_minus(w);
        return d;
    }

    std::vector<Integer> coefficients(int max_degree) const {
        return numerator.expand_over(denominator_weights, max_degree);
    }

    /// Cancel every factor (1 - t^w) that divides the numerator.
    void reduce() {
        std::vector<int> kept;
        for (int w : denominator_weights) {
            if (auto q = numerator.divide_one_minus(w))
                numerator = std::move(*q);
            else
                kept.push_back(w);
        }
        denominator_weights = std::move(kept);
    }

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

inline std::string to_string(const RationalSeries& r) {
    if (r.is_polynomial()) return to_string(r.numerator);
    std::string den;
    for (int w : r.denominator_weights) den += "(1 - t" + (w == 1 ? std::string() : "^" + std::to_string(w)) + ")";
    return "(" + to_string(r.numerator) + ") / (" + den + ")";
}

}  // namespace qorb
