#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace qorb {

/// (3g - 6) + n + (e if half_degree else 2e) - sum(ages)
inline int virtual_dim_M(int g, int n_marks, int e, const std::vector<int>& ages, bool half_degree = false) {
    if (e < 0 || n_marks < 0) throw ContractViolation("virtual_dim_M: negative marks or degree");
    for (int a : ages)
        if (a != 0 && a != g - 1) throw ContractViolation("virtual_dim_M: ages must be 0 or g-1");
    return (3 * g - 6) + n_marks + (half_degree ? e : 2 * e) - std::accumulate(ages.begin(), ages.end(), 0);
}

/// (2g - 4) + 3 + g e - sum(ages)
inline int virtual_dim_N(int g, int e, const std::vector<int>& ages) {
    if (e < 0) throw ContractViolation("virtual_dim_N: negative degree");
    for (int a : ages)
        if (a != 0 && a != g - 1) throw ContractViolation("virtual_dim_N: ages must be 0 or g-1");
    return (2 * g - 4) + 3 + g * e - std::accumulate(ages.begin(), ages.end(), 0);
}

enum class StackyModel { PlainP1, P12, P22 };

inline std::string to_string(StackyModel m) {
    switch (m) {
        case StackyModel::PlainP1: return "P1";
        case StackyModel::P12: return "P(1,2)";
        case StackyModel::P22: return "P_{2,2}";
    }
    return "?";
}

/// Riemann-Roch data for chi(Lambda^-1 L^2 O_C(k)) on C x X: the smooth part contributes
/// untwisted * ((1-g) - 1) and each mu_2 point twisted_i * ((1-g) - 1) with opposite sign.
struct RiemannRochData {
    Rational untwisted;
    std::vector<Rational> twisted;
};

inline RiemannRochData riemann_roch_data(StackyModel m) {
    switch (m) {
        case StackyModel::PlainP1: return {2, {}};
        case StackyModel::P12: return {ratio(5, 4), {ratio(1, 4)}};
        case StackyModel::P22: return {1, {ratio(1, 2), ratio(1, 2)}};
    }
    throw ContractViolation("unknown stacky model");
}

/// N = -chi = g * (untwisted - sum twisted).
inline int extension_rank(StackyModel m, int g) {
    if (g < 2) throw ContractViolation("extension_rank: genus must be at least 2");
    const auto rr = riemann_roch_data(m);
    Rational c = rr.untwisted;
    for (const auto& t : rr.twisted) c -= t;
    const Rational n = c * g;
    if (n.get_den() != 1) throw std::logic_error("extension rank is not integral");
    return static_cast<int>(n.get_num().get_si());
}

/// Projective bundle P^{N-1} over the Jacobian, or the Jacobian itself when N = 0.
inline int extension_moduli_dimension(StackyModel m, int g) {
    const int n = extension_rank(m, g);
    return n == 0 ? g : g + n - 1;
}

/// coefficient * w^p [X]^x on the Jacobian.
struct JacobianMonomial {
    int p = 0;
    int x = 0;
    Rational coefficient;
};

/// (4w + [X])^n1 [X]^(2 n2 + 2), one term per power of w.
inline std::vector<JacobianMonomial> jacobian_integrand(int n1, int n2) {
    if (n1 < 0 || n2 < 0) throw ContractViolation("jacobian_integrand: negative exponent");
    std::vector<JacobianMonomial> out;
    for (int k = 0; k <= n1; ++k)
        out.push_back({k, n1 - k + 2 * n2 + 2, Rational(binomial(n1, k)) * power(Rational(4), k)});
    return out;
}

/// [X]^(2g-1+i) = (-8)^i / i! w^i; lower powers vanish.
inline JacobianMonomial substitute_x(int g, const JacobianMonomial& m) {
    const int i = m.x - (2 * g - 1);
    if (i < 0) return {m.p, 0, 0};
    return {m.p + i, 0, m.coefficient * power(Rational(-8), i) / Rational(factorial(i))};
}

/// Jacobian-side value <(4w + [X])^n1 ([X]^2)^n2 g^n3 [X]^2, [J]> with int_J w^g = omega_top (default g!).
/// Inputs with n1 + 2 n2 + 2 != 3g - 1 give 0.
inline Rational donaldson_evaluate(int g, int n1, int n2, int n3 = 0, const std::optional<Rational>& omega_top = std::nullopt) {
    if (g < 1) throw ContractViolation("donaldson_evaluate: genus must be positive");
    if (n3 != 0) throw Unsupported("donaldson_evaluate: gamma powers have no Jacobian-side expression");
    if (n1 < 0 || n2 < 0) throw ContractViolation("donaldson_evaluate: negative exponent");
    if (n1 + 2 * n2 + 2 != 3 * g - 1) return 0;
    const Rational top = omega_top ? *omega_top : Rational(factorial(g));
    Rational total = 0;
    for (const auto& m : jacobian_integrand(n1, n2)) {
        const auto s = substitute_x(g, m);
        if (s.p == g) total += s.coefficient;
    }
    return total * top;
}

/// The signed three-point invariant: (-1)^{g-1} times the Jacobian-side value.
inline Rational donaldson_gw_side(int g, int n1, int n2, int n3 = 0, const std::optional<Rational>& omega_top = std::nullopt) {
    return Rational(sign_power(g - 1)) * donaldson_evaluate(g, n1, n2, n3, omega_top);
}

}  // namespace qorb
