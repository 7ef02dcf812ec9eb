#pragma once

#include <optional>
#include <vector>

#include "kstab/rational.hpp"

// Exact dense linear algebra for the tiny systems (n <= 3) the polytope and
// fan code solves. Internal to the library.
namespace kstab::detail {

inline Rational det(const std::vector<std::vector<Rational>>& m) {
    switch (m.size()) {
        case 1:
            return m[0][0];
        case 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        case 3:
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        default:
            throw std::invalid_argument("det: only sizes 1..3 are supported");
    }
}

// Cramer solve of a x = b; nullopt when a is singular.
inline std::optional<std::vector<Rational>> solve(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<Rational>& b) {
    const std::size_t n = a.size();
    const Rational d = det(a);
    if (d == 0) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Rational>> m = a;
        for (std::size_t row = 0; row < n; ++row) m[row][col] = b[row];
        x[col] = det(m) / d;
    }
    return x;
}

inline int rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int r = 0;
    for (std::size_t col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(r);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[pivot]);
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (row == static_cast<std::size_t>(r) || m[row][col] == 0) continue;
            const Rational f = m[row][col] / m[static_cast<std::size_t>(r)][col];
            for (std::size_t c = col; c < cols; ++c)
                m[row][c] -= f * m[static_cast<std::size_t>(r)][c];
        }
        ++r;
    }
    return r;
}

}  // namespace kstab::detail
