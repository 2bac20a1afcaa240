// Test-only reference linear algebra: textbook Gauss-Jordan with plain
// division, written independently of the engine's row reduction so the two
// can check each other.  Deliberately includes no engine linear algebra.

#pragma once

#include <optional>
#include <vector>

#include "apolar/fields.hpp"

namespace oracle {

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
int naive_rank(Mat<K> a) {
    int rank = 0;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < rows && apolar::is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[p]);
        K inv = apolar::field_inverse(a[static_cast<std::size_t>(rank)][c]);
        for (std::size_t j = 0; j < cols; ++j) a[static_cast<std::size_t>(rank)][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(rank) || apolar::is_zero(a[i][c])) continue;
            K f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

template <class K>
long long naive_kernel_dim(const Mat<K>& a) {
    if (a.empty()) return 0;
    return static_cast<long long>(a[0].size()) - naive_rank(a);
}

// brute-force membership of v in the row span of a
template <class K>
bool naive_in_span(const Mat<K>& a, const std::vector<K>& v) {
    Mat<K> with = a;
    with.push_back(v);
    return naive_rank(a) == naive_rank(with);
}

}  // namespace oracle
