#pragma once

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qorb {

/// Small dense matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// In-place Gauss-Jordan elimination; returns the rank.
    std::size_t row_reduce() {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = r;
            while (pivot < rows_ && (*this)(pivot, c) == 0) ++pivot;
            if (pivot == rows_) continue;
            swap_rows(pivot, r);
            const Rational inv = 1 / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                const Rational f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            ++r;
        }
        return r;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.row_reduce();
    }

private:
    void swap_rows(std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(x, j), (*this)(y, j));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    aug.row_reduce();
    for (std::size_t i = 0; i < n; ++i)
        if (aug(i, i) != 1) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

}  // namespace qorb
