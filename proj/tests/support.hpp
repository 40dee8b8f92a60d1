#pragma once

#include "oracles.hpp"

#include <qorb/qorb.hpp>

#include <random>

namespace testing_support {

inline qorb::Polynomial from_oracle(const oracle::Poly& p) {
    qorb::Polynomial out;
    for (const auto& [e, c] : p) out.add_term(qorb::Monomial(e[0], e[1], e[2], e[3]), c);
    return out;
}

inline qorb::Polynomial P(const std::string& text) { return qorb::parse_polynomial(text); }

/// Fixed-seed generator shared by the property tests.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x9e3779b97f4a7c15ull ^ salt); }

}  // namespace testing_support
