#include "supersplit/linsolve.hpp"

#include <algorithm>
#include <cstddef>

namespace supersplit::linsolve {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    std::size_t rows = b.size();
    std::size_t cols = a.empty() ? 0 : a[0].size();
    if (cols == 0) {
        for (const auto& v : b)
            if (v != 0) return std::nullopt;
        return Vector{};
    }
    Matrix aug(rows, Vector(cols + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    Vector x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

namespace {

std::optional<Vector> solve_on_support(const Matrix& a, const Vector& b,
                                       const std::vector<std::size_t>& support) {
    std::size_t rows = b.size();
    Matrix sub(rows, Vector(support.size(), 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < support.size(); ++j) sub[i][j] = a[i][support[j]];
    auto partial = solve(sub, b);
    if (!partial) return std::nullopt;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    Vector x(cols, 0);
    for (std::size_t j = 0; j < support.size(); ++j) x[support[j]] = (*partial)[j];
    return x;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Vector> solve_min_support(const Matrix& a, const Vector& b) {
    auto fallback = solve(a, b);
    if (!fallback) return std::nullopt;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    std::size_t fallback_support = 0;
    for (const auto& v : *fallback)
        if (v != 0) ++fallback_support;
    std::size_t max_size = 3;
    if (cols > 40) max_size = 1;
    else if (cols > 16) max_size = 2;
    for (std::size_t size = 0; size <= std::min(max_size, cols); ++size) {
        if (size >= fallback_support) break;  // fallback already at least as sparse
        std::vector<std::size_t> support(size);
        for (std::size_t i = 0; i < size; ++i) support[i] = i;
        if (size == 0) {
            if (auto x = solve_on_support(a, b, support)) return x;
            continue;
        }
        do {
            if (auto x = solve_on_support(a, b, support)) return x;
        } while (next_combination(support, cols));
    }
    return fallback;
}

}  // namespace supersplit::linsolve
