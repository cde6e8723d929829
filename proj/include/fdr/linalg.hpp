#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "fdr/ratfunc.hpp"

namespace fdr {

template <class C>
using Matrix = std::vector<std::vector<C>>;

/**
 * Reduced row echelon form in place, over an exact field.  Returns the pivot
 * column of each pivot row; rank = number of pivots.  Rows past the rank are
 * zeroed but not removed.
 */
template <class C>
std::vector<int> rref(Matrix<C>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && CoeffOps<C>::is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        C inv = C(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || CoeffOps<C>::is_zero(a[i][c])) continue;
            C f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <class C>
Matrix<C> invert(const Matrix<C>& a) {
    size_t n = a.size();
    Matrix<C> aug(n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("invert: not square");
        aug[i] = a[i];
        aug[i].resize(2 * n, C(0));
        aug[i][n + i] = C(1);
    }
    std::vector<int> piv = rref(aug);
    if (piv.size() != n || (n > 0 && piv.back() >= int(n)))
        throw std::domain_error("invert: singular matrix");
    Matrix<C> inv(n);
    for (size_t i = 0; i < n; ++i)
        inv[i] = std::vector<C>(aug[i].begin() + long(n), aug[i].end());
    return inv;
}

}  // namespace fdr
