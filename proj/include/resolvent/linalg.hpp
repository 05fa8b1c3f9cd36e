#ifndef RESOLVENT_LINALG_HPP
#define RESOLVENT_LINALG_HPP

#include <optional>
#include <vector>

#include "resolvent/rational.hpp"

namespace resolvent {

// Solves A x = b exactly over Q (A given row-major, possibly overdetermined).
// Returns nullopt when the system is inconsistent; when the solution space is
// positive-dimensional the free variables are set to zero (deterministic).
inline std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(A[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        const Rational inv = Rational(1) / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(A[i][c]) == 0) continue;
            const Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

// Rank of a rational matrix (destructive Gaussian elimination).
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> A) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(A[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        const Rational inv = Rational(1) / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(A[i][c]) == 0) continue;
            const Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace resolvent

#endif
