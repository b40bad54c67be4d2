#pragma once

#include <optional>

#include "cells.hpp"
#include "involution.hpp"
#include "partition.hpp"
#include "permutation.hpp"

namespace schubcalc {

/// Vexillary via the chain criterion: Ess(D(w)) totally ordered sw-ne.
/// Equivalent to 2143-avoidance; both routes ship so they can be checked
/// against each other.
inline bool is_vexillary_chain(const Permutation& w) {
    return essential_set(rothe_diagram(w)).is_sw_ne_chain();
}

/// Rows of D(w) as column sets, for the total-order-by-inclusion criterion.
inline bool rothe_rows_nested(const Permutation& w) {
    int n = w.size();
    std::vector<std::set<int>> rows(n);
    CellSet d = rothe_diagram(w);
    for (const Cell& c : d.cells()) rows[c.row - 1].insert(c.col);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& A = rows[a];
            const auto& B = rows[b];
            bool ab = std::includes(B.begin(), B.end(), A.begin(), A.end());
            bool ba = std::includes(A.begin(), A.end(), B.begin(), B.end());
            if (!ab && !ba) return false;
        }
    return true;
}

inline bool is_vexillary(const Involution& y) { return is_vexillary(y.perm()); }

/// Vexillary with Ess(D^Sp) a sw-ne chain.
inline bool is_sp_vexillary(const Involution& y) {
    return is_vexillary(y.perm()) &&
           essential_set(involution_diagram(y.perm(), Flavor::Sp)).is_sw_ne_chain();
}

/// Ess(D^O(y)) confined to one row {m} x N. An empty essential set
/// classifies as I-Grassmannian with witness m = 0.
inline std::optional<int> i_grassmannian_row(const Involution& y) {
    CellSet ess = essential_set(involution_diagram(y.perm(), Flavor::O));
    if (ess.empty()) return 0;
    int m = ess.cells().front().row;
    for (const Cell& c : ess.cells())
        if (c.row != m) return std::nullopt;
    return m;
}

inline bool is_fpf_i_grassmannian(const Involution& z) {
    if (!z.fixed_point_free()) return false;
    Involution zz = z.flavor() == Flavor::Sp ? z : Involution::symplectic(z.perm());
    return i_grassmannian_row(dearc(zz, DearcSide::R)).has_value();
}

struct Classification {
    bool vexillary = false;
    bool sp_vexillary = false;
    std::optional<int> i_grassmannian; // witness row m
    bool fpf_i_grassmannian = false;
    Partition shape_o, shape_sp;
};

inline Classification classify(const Involution& y) {
    Classification c;
    c.vexillary = is_vexillary(y);
    c.sp_vexillary = is_sp_vexillary(y);
    c.i_grassmannian = i_grassmannian_row(y);
    c.fpf_i_grassmannian = is_fpf_i_grassmannian(y);
    c.shape_o = involution_shape(y.perm(), Flavor::O);
    c.shape_sp = involution_shape(y.perm(), Flavor::Sp);
    return c;
}

} // namespace schubcalc
