#pragma once

#include <vector>

namespace sl2cas {

/// Kernel basis of a dense matrix over any exact field (rows of equal width).
/// The field type needs +, -, *, /, equality and an ADL-visible is_zero().
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivotCol;
    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        int pr = -1;
        while (lead < cols) {
            for (int i = r; i < rows; ++i)
                if (!is_zero(m[i][lead])) {
                    pr = i;
                    break;
                }
            if (pr >= 0) break;
            ++lead;
        }
        if (lead >= cols) break;
        std::swap(m[r], m[pr]);
        const F inv = F(1) / m[r][lead];
        for (int j = lead; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][lead])) continue;
            const F f = m[i][lead];
            for (int j = lead; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivotCol.push_back(lead);
        ++lead;
    }
    std::vector<bool> isPivot(cols, false);
    for (int c : pivotCol) isPivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<F> v(cols, F(0));
        v[freeCol] = F(1);
        for (std::size_t r = 0; r < pivotCol.size(); ++r) v[pivotCol[r]] = F(0) - m[r][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
int rank_of(std::vector<std::vector<F>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    int rank = 0, lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        int pr = -1;
        while (lead < cols) {
            for (int i = r; i < rows; ++i)
                if (!is_zero(m[i][lead])) {
                    pr = i;
                    break;
                }
            if (pr >= 0) break;
            ++lead;
        }
        if (lead >= cols) break;
        std::swap(m[r], m[pr]);
        for (int i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][lead])) continue;
            const F f = m[i][lead] / m[r][lead];
            for (int j = lead; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++rank;
        ++lead;
    }
    return rank;
}

}  // namespace sl2cas
