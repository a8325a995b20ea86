#pragma once

// Fraction-free integer kernels shared by the exact rank and LP code. Each is
// templated on the integer type so it can run on CheckedInt first and fall
// back to mpz_class when an intermediate overflows.

#include "tlocus/checked_int.hpp"

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

namespace tlocus::detail {

template <class Int>
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

template <class Int>
IntMatrix<Int> convert(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols) {
    IntMatrix<Int> m;
    m.rows = rows.size();
    m.cols = cols;
    m.data.reserve(m.rows * cols);
    for (const auto& row : rows)
        for (const auto& x : row) {
            if constexpr (std::is_same_v<Int, CheckedInt>)
                m.data.push_back(to_checked(x));
            else
                m.data.push_back(x);
        }
    return m;
}

/// Bareiss fraction-free forward elimination in place; returns the rank. The
/// first `rank` rows then span the original row space. Every division is
/// exact because each entry is a minor of the input.
template <class Int>
std::size_t bareiss_eliminate(IntMatrix<Int>& a) {
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && is_zero_int(a.at(p, c)))
            ++p;
        if (p == a.rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < a.cols; ++j)
                std::swap(a.at(p, j), a.at(r, j));
        const Int pivot = a.at(r, c);
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            const Int factor = a.at(i, c);
            for (std::size_t j = c + 1; j < a.cols; ++j)
                a.at(i, j) = (pivot * a.at(i, j) - factor * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

template <class Int>
std::size_t bareiss_rank(IntMatrix<Int> a) {
    return bareiss_eliminate(a);
}

/// Outcome of phase-1 simplex on {A z = b, z >= 0}.
template <class Int>
struct Phase1Result {
    bool feasible = false;
    // Feasible: z_j = numer[j] / denom.
    std::vector<Int> numer;
    Int denom = 1;
    // Infeasible: y with y^T A <= 0 and y^T b > 0, as dual_numer / denom,
    // expressed in the caller's (unflipped) row signs.
    std::vector<Int> dual_numer;
    std::size_t pivots = 0;
};

/// Integer-pivoting phase-1 simplex (lrs-style tableau with a common
/// denominator) with Bland's rule. `a` is m x n, `b` has m entries.
template <class Int>
Phase1Result<Int> integer_phase1(const IntMatrix<Int>& a, const std::vector<Int>& b) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    const std::size_t width = n + m + 1; // structural, artificial, rhs
    const std::size_t rhs = n + m;

    // Row 0 is the phase-1 objective (reduced costs); rows 1..m constraints.
    IntMatrix<Int> t;
    t.rows = m + 1;
    t.cols = width;
    t.data.assign(t.rows * width, Int(0));
    std::vector<int> flip(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (sign_of(b[i]) < 0)
            flip[i] = -1;
        for (std::size_t j = 0; j < n; ++j) {
            t.at(i + 1, j) = a.at(i, j);
            if (flip[i] < 0)
                t.at(i + 1, j) = -t.at(i + 1, j);
        }
        t.at(i + 1, n + i) = 1;
        t.at(i + 1, rhs) = b[i];
        if (flip[i] < 0)
            t.at(i + 1, rhs) = -t.at(i + 1, rhs);
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 1; i <= m; ++i)
            t.at(0, j) -= t.at(i, j);
    for (std::size_t i = 1; i <= m; ++i)
        t.at(0, rhs) -= t.at(i, rhs);

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;
    Int denom = 1;

    Phase1Result<Int> out;
    while (true) {
        if (is_zero_int(t.at(0, rhs)))
            break; // all artificials at zero: feasible
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (sign_of(t.at(0, j)) < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break; // optimal with positive infeasibility
        std::size_t leave = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            if (sign_of(t.at(i, enter)) <= 0)
                continue;
            if (leave == 0) {
                leave = i;
                continue;
            }
            // Compare t(i,rhs)/t(i,enter) against the incumbent.
            const Int lhs = t.at(i, rhs) * t.at(leave, enter);
            const Int rhs_v = t.at(leave, rhs) * t.at(i, enter);
            if (lhs < rhs_v || (lhs == rhs_v && basis[i - 1] < basis[leave - 1]))
                leave = i;
        }
        // Phase 1 is bounded below, so a ratio row always exists.
        const Int pivot = t.at(leave, enter);
        for (std::size_t i = 0; i < t.rows; ++i) {
            if (i == leave)
                continue;
            const Int factor = t.at(i, enter);
            for (std::size_t j = 0; j < width; ++j)
                t.at(i, j) = (pivot * t.at(i, j) - factor * t.at(leave, j)) / denom;
        }
        denom = pivot;
        basis[leave - 1] = enter;
        ++out.pivots;
    }

    out.denom = denom;
    if (is_zero_int(t.at(0, rhs))) {
        out.feasible = true;
        out.numer.assign(n, Int(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n)
                out.numer[basis[i]] = t.at(i + 1, rhs);
    } else {
        // Reduced cost of artificial i is 1 - y_i, stored as denom*(1 - y_i).
        out.dual_numer.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            Int yi = denom - t.at(0, n + i);
            if (flip[i] < 0)
                yi = -yi;
            out.dual_numer[i] = yi;
        }
    }
    return out;
}

} // namespace tlocus::detail
