#ifndef HELLYCONE_LP_HPP
#define HELLYCONE_LP_HPP

#include <hellycone/linalg.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace hellycone {

// Exact phase-1 simplex with Bland's anti-cycling rule.
//
// Decides feasibility of  A x = b, x >= 0  and returns a feasible x when one
// exists. All pivoting is over the rationals, so the answer is never subject
// to rounding: a returned x satisfies the system exactly.
inline std::optional<Vec> feasible_nonneg(const Matrix& a, const Vec& b) {
    const std::size_t m = a.height();
    const std::size_t n = a.width;
    if (b.size() != m) throw input_error("feasible_nonneg: dimension mismatch");

    // tableau: n structural + m artificial columns + rhs
    const std::size_t cols = n + m + 1;
    std::vector<Vec> t(m, Vec(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a.rows[i][j] : a.rows[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // reduced costs for: minimize sum of artificials
    Vec obj(cols, Rational(0));
    for (std::size_t j = n; j < n + m; ++j) obj[j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const Rational inv = 1 / t[pr][pc];
        for (auto& x : t[pr]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rational f = t[i][pc];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[pr][j];
        }
        if (obj[pc] != 0) {
            const Rational f = obj[pc];
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };

    for (;;) {
        // Bland: entering = smallest index with negative reduced cost
        std::size_t enter = cols - 1;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols - 1) break;  // optimal
        // ratio test, ties broken by smallest basis variable index
        std::size_t leave = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw invariant_error("phase-1 objective unbounded below");
        pivot(leave, enter);
    }

    // optimum of the artificial objective
    Rational value(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) value += t[i][cols - 1];
    if (value != 0) return std::nullopt;

    Vec x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
    return x;
}

// A point of the polyhedron {x : Bx <= c}, if it is nonempty.
// Free variables are split as x = u - w with slacks: [B -B I](u;w;s) = c.
inline std::optional<Vec> polyhedron_point(const Matrix& b, const Vec& c) {
    const std::size_t m = b.height();
    const std::size_t d = b.width;
    Matrix a(2 * d + m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec row(2 * d + m, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
            row[j] = b.rows[i][j];
            row[d + j] = -b.rows[i][j];
        }
        row[2 * d + i] = 1;
        a.rows.push_back(std::move(row));
    }
    auto sol = feasible_nonneg(a, c);
    if (!sol) return std::nullopt;
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = (*sol)[j] - (*sol)[d + j];
    return x;
}

}  // namespace hellycone

#endif  // HELLYCONE_LP_HPP
