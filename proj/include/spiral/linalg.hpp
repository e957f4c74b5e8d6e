#pragma once

// Dense exact linear algebra over a field type F (Rational or Eisenstein).

#include "spiral/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace spiral::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

using QMatrix = Matrix<Rational>;

template <class F>
bool is_zero(const F& x) {
    return x == F(0);
}

/// Reduced row echelon form in place, pivoting only in the first cols columns; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        F inv = F(1) / m[row][col];
        const std::size_t width = m[row].size();
        for (std::size_t c = col; c < width; ++c) m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col])) continue;
            F f = m[r][col];
            for (std::size_t c = col; c < width; ++c) m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    return rref(rows, cols).size();
}

/// Basis of {v : m v = 0}; one vector per free column with a 1 there.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of m v = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b, std::size_t cols) {
    Matrix<F> aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    auto pivots = rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<F> v(cols, F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = aug[r][cols];
    return v;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    std::size_t n = m.size();
    Matrix<F> aug(n, std::vector<F>(2 * n, F(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = F(1);
    }
    auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    Matrix<F> inv(n, std::vector<F>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

template <class F>
std::vector<F> apply(const Matrix<F>& m, const std::vector<F>& v) {
    std::vector<F> out(m.size(), F(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(m[i][j])) out[i] = out[i] + m[i][j] * v[j];
    return out;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b.front().size();
    Matrix<F> out(n, std::vector<F>(p, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < p; ++j) out[i][j] = out[i][j] + a[i][l] * b[l][j];
        }
    return out;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
    if (m.empty()) return {};
    Matrix<F> out(m.front().size(), std::vector<F>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

template <class F>
Matrix<F> identity(std::size_t n) {
    Matrix<F> m(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
    return m;
}

/// Matrix whose columns are the given vectors.
template <class F>
Matrix<F> from_columns(const std::vector<std::vector<F>>& cols, std::size_t rows) {
    Matrix<F> m(rows, std::vector<F>(cols.size(), F(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    return m;
}

}  // namespace spiral::linalg
