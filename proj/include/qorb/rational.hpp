#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qorb {

/// Exact rational scalar; arithmetic results are kept canonical by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical n/d; GMP's two-argument constructor does not reduce.
inline Rational ratio(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Always renders "p/q", including "n/1" for integers.
inline std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Renders "p/q", or just "p" when the denominator is one.
inline std::string short_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return fraction_string(q);
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer pow2(long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

inline Rational power(const Rational& base, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace qorb
