#include "octig/linalg.hpp"

#include <stdexcept>

namespace octig {

namespace {

// Cheap complexity proxy used for pivot choice.
size_t weight_of(const Scalar& x) { return x.num().terms().size() + x.den().terms().size(); }

}  // namespace

std::vector<int> rref(ScalarMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // pick the structurally simplest nonzero pivot in column c
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            if (best == rows || weight_of(m[i][c]) < weight_of(m[best][c])) best = i;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j)
            if (!m[r][j].is_zero()) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(ScalarMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<ScalarVec> solve_in_span(const std::vector<ScalarVec>& columns, const ScalarVec& target) {
    size_t n = columns.size();
    size_t m = target.size();
    for (const auto& col : columns)
        if (col.size() != m) throw std::invalid_argument("solve_in_span: ragged columns");

    ScalarMatrix aug(m, ScalarVec(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = columns[j][i];
        aug[i][n] = target[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == static_cast<int>(n)) return std::nullopt;  // inconsistent

    ScalarVec x(n, Scalar(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][n];
    return x;
}

std::vector<ScalarVec> kernel_of_columns(const std::vector<ScalarVec>& columns) {
    size_t n = columns.size();
    if (n == 0) return {};
    size_t m = columns[0].size();
    ScalarMatrix a(m, ScalarVec(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
    std::vector<int> pivots = rref(a);

    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<ScalarVec> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ScalarVec v(n, Scalar(0));
        v[free] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMatrix invert(const ScalarMatrix& m) {
    size_t n = m.size();
    ScalarMatrix aug(n, ScalarVec(2 * n, Scalar(0)));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("invert: not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = Scalar(1);
    }
    std::vector<int> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != static_cast<int>(n - 1))
        throw std::domain_error("invert: singular matrix");
    ScalarMatrix inv(n, ScalarVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace octig
