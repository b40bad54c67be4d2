#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace schubcalc {

template <class Ring>
using SquareMatrix = std::vector<std::vector<Ring>>;

template <class Ring>
inline void require_skew(const SquareMatrix<Ring>& a) {
    size_t n = a.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian needs even size");
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("matrix not square");
        if (!(a[i][i] == Ring())) throw std::invalid_argument("matrix has nonzero diagonal");
        for (size_t j = i + 1; j < n; ++j)
            if (!(a[i][j] == Ring() - a[j][i])) throw std::invalid_argument("matrix not skew-symmetric");
    }
}

namespace detail {

// first-row expansion over the index subset encoded in `mask`, memoized
template <class Ring>
Ring pfaffian_subset(const SquareMatrix<Ring>& a, unsigned mask, std::map<unsigned, Ring>& memo) {
    if (mask == 0) return Ring(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    int first = __builtin_ctz(mask);
    Ring acc{};
    int sign = 1;
    for (int j = first + 1; j < static_cast<int>(a.size()); ++j) {
        if (!(mask >> j & 1)) continue;
        unsigned rest = mask & ~(1u << first) & ~(1u << j);
        Ring sub = pfaffian_subset(a, rest, memo);
        if (sign > 0) acc = acc + a[first][j] * sub;
        else acc = acc - a[first][j] * sub;
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace detail

/// Pfaffian by recursive first-row expansion with memoization on index
/// subsets. Validates skew-symmetry and even size.
template <class Ring>
inline Ring pfaffian(const SquareMatrix<Ring>& a) {
    require_skew(a);
    if (a.empty()) return Ring(1);
    if (a.size() > 16) throw std::invalid_argument("pfaffian size cap exceeded");
    std::map<unsigned, Ring> memo;
    return detail::pfaffian_subset(a, (1u << a.size()) - 1, memo);
}

namespace detail {

// Laplace expansion along the top surviving row over a column subset;
// division-free, memoized on the subset.
template <class Ring>
Ring det_subset(const SquareMatrix<Ring>& a, unsigned cols, int row, std::map<unsigned, Ring>& memo) {
    if (cols == 0) return Ring(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Ring acc{};
    int sign = 1;
    for (int j = 0; j < static_cast<int>(a.size()); ++j) {
        if (!(cols >> j & 1)) continue;
        Ring sub = det_subset(a, cols & ~(1u << j), row + 1, memo);
        if (sign > 0) acc = acc + a[row][j] * sub;
        else acc = acc - a[row][j] * sub;
        sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
}

} // namespace detail

/// Determinant by division-free expansion (sizes stay small here).
template <class Ring>
inline Ring determinant(const SquareMatrix<Ring>& a) {
    if (a.empty()) return Ring(1);
    for (auto& r : a)
        if (r.size() != a.size()) throw std::invalid_argument("matrix not square");
    if (a.size() > 16) throw std::invalid_argument("determinant size cap exceeded");
    std::map<unsigned, Ring> memo;
    return detail::det_subset(a, (1u << a.size()) - 1, 0, memo);
}

} // namespace schubcalc
