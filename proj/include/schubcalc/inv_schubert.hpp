#pragma once

#include "involution.hpp"
#include "schubert.hpp"

namespace schubcalc {

/// Involution Schubert polynomial at window m: the compatible-sequence sum
/// over reduced involution words, equivalently the sum of the windowed
/// Schubert polynomials of the atoms. Homogeneous of the involution length.
inline Polynomial inv_schubert(const Involution& z, int m = 0) {
    static detail::PolyCache<std::tuple<Permutation, int, int>> cache;
    return cache.get({z.perm(), static_cast<int>(z.flavor()), m}, [&] {
        Polynomial out;
        for (const Permutation& w : atoms(z)) out += schubert_bjs(w, m);
        return out;
    });
}

/// Involution Stanley symmetric function on the window letters x_{-m..-1}.
inline Polynomial inv_stanley(const Involution& z, int m) {
    static detail::PolyCache<std::tuple<Permutation, int, int>> cache;
    return cache.get({z.perm(), static_cast<int>(z.flavor()), m}, [&] {
        Polynomial out;
        for (const Permutation& w : atoms(z)) out += stanley_sym(w, m);
        return out;
    });
}

struct InvRecurrenceCheck {
    bool pass = false;
    bool expect_zero = false;
    int weighted_factor_log2 = 0; // cyc(z) - cyc(z'), the factor on the 2^cyc-weighted family
    Permutation down;             // z' when a descent step exists
    Polynomial lhs, rhs;          // both sides of the unweighted identity
    std::string detail;
};

/// Divided-difference recurrence for involution Schubert polynomials at
/// window m, letter i >= 1. For a descent i the polynomial drops to the
/// involution z' one step down; the classical statement carries the factor
/// 2^{cyc(z)-cyc(z')} on the 2^{cyc}-weighted family, which is what gets
/// verified here (for Sp the factor is always 1, and a step that would
/// leave the fixed-point-free class gives 0 instead).
inline InvRecurrenceCheck check_inv_recurrence(const Involution& z, int i, int m = 0) {
    if (i < 1) throw std::invalid_argument("letter must be >= 1");
    InvRecurrenceCheck r;
    Polynomial f = inv_schubert(z, m);
    Polynomial dz = divided_difference_pair(f, xv(i), xv(i + 1));
    r.lhs = dz;

    if (!has_right_descent(z.perm(), i)) {
        r.expect_zero = true;
        r.detail = "ascent";
        r.pass = dz.is_zero();
        return r;
    }
    Permutation down = involution_step_down(z.perm(), i);
    if (z.flavor() == Flavor::Sp && !is_fixed_point_free(down, z.size())) {
        r.expect_zero = true;
        r.detail = "leaves the fpf class";
        r.pass = dz.is_zero();
        return r;
    }
    r.down = down;
    r.weighted_factor_log2 = cyc(z.perm()) - cyc(down);
    Involution zd(down, z.flavor());
    r.rhs = inv_schubert(zd, m);
    r.detail = "descent";
    // Unweighted both sides are equal; multiplying by 2^{cyc} on each side
    // reproduces the weighted statement with factor 2^{weighted_factor_log2}.
    r.pass = (dz == r.rhs);
    return r;
}

} // namespace schubcalc
