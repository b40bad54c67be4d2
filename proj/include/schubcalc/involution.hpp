#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cells.hpp"
#include "partition.hpp"
#include "permutation.hpp"

namespace schubcalc {

inline bool is_involution(const Permutation& w) { return compose(w, w).is_identity(); }

inline bool is_fixed_point_free(const Permutation& w, int n) {
    if (n % 2 != 0) return false;
    for (int i = 1; i <= n; ++i)
        if (w(i) == i) return false;
    return true;
}

/// (1,2)(3,4)...(2r-1,2r), the minimal fixed-point-free involution.
inline Permutation fpf_minimal(int n) {
    if (n % 2 != 0) throw std::invalid_argument("fpf involutions need even size");
    std::vector<int> line(n);
    for (int i = 0; i < n; i += 2) {
        line[i] = i + 2;
        line[i + 1] = i + 1;
    }
    return Permutation(std::move(line));
}

/// An involution of {1,2,...}; Sp flavor additionally requires no fixed
/// points within its support window (which forces even size).
class Involution {
public:
    Involution() : flavor_(Flavor::O) {}

    Involution(Permutation p, Flavor f) : perm_(std::move(p)), flavor_(f) {
        if (!is_involution(perm_)) throw std::invalid_argument("not an involution");
        if (f == Flavor::Sp && !is_fixed_point_free(perm_, perm_.size()))
            throw std::invalid_argument("Sp involutions must be fixed-point-free");
    }

    static Involution orthogonal(Permutation p) { return Involution(std::move(p), Flavor::O); }
    static Involution symplectic(Permutation p) { return Involution(std::move(p), Flavor::Sp); }

    const Permutation& perm() const { return perm_; }
    Flavor flavor() const { return flavor_; }
    int size() const { return perm_.size(); }
    int operator()(int i) const { return perm_(i); }
    bool fixed_point_free() const { return is_fixed_point_free(perm_, perm_.size()); }

    friend bool operator==(const Involution& a, const Involution& b) {
        return a.perm_ == b.perm_ && a.flavor_ == b.flavor_;
    }

private:
    Permutation perm_;
    Flavor flavor_;
};

/// Number of 2-cycles.
inline int cyc(const Permutation& y) {
    int c = 0;
    for (int i = 1; i <= y.size(); ++i)
        if (y(i) > i) ++c;
    return c;
}
inline int cyc(const Involution& y) { return cyc(y.perm()); }

/// The 2-cycles (a,b), a<b, sorted by a.
inline std::vector<std::pair<int, int>> two_cycles(const Permutation& y) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= y.size(); ++i)
        if (y(i) > i) out.emplace_back(i, y(i));
    return out;
}

inline Permutation minimal_involution(Flavor f, int n) {
    return f == Flavor::O ? Permutation::identity() : fpf_minimal(n);
}

/// The involution-word step z' -> s_i o z' o s_i taken downward: for a
/// right descent i of z this is the unique strictly shorter involution
/// mapping back up to z. It is s_i z s_i when that differs from z, and
/// z s_i when (i,i+1) is a cycle of z.
inline Permutation involution_step_down(const Permutation& z, int i) {
    if (!has_right_descent(z, i)) throw std::invalid_argument("not a descent");
    Permutation conj = compose(Permutation::simple(i), right_mul_s(z, i));
    return conj == z ? right_mul_s(z, i) : conj;
}

/// Demazure conjugation upward: nullopt when i is a descent.
inline std::optional<Permutation> involution_step_up(const Permutation& z, int i) {
    if (has_right_descent(z, i)) return std::nullopt;
    Permutation zs = right_mul_s(z, i);
    Permutation conj = left_mul_s(zs, i);
    return length(conj) > length(zs) ? conj : zs;
}

namespace detail {

struct AtomTable {
    // involution -> atoms, complete for I^K_n
    std::map<Permutation, std::vector<Permutation>> atoms;
};

/// Breadth-first over Demazure conjugation from the minimal element of
/// I^K_n, carrying atom sets along the edges; visited states are memoized
/// per length level (each involution appears at exactly one level).
inline const AtomTable& atom_table(Flavor f, int n) {
    static std::map<std::pair<int, int>, AtomTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto key = std::make_pair(static_cast<int>(f), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    AtomTable table;
    Permutation start = minimal_involution(f, n);
    table.atoms[start] = {Permutation::identity()};
    std::vector<Permutation> level = {start};
    while (!level.empty()) {
        std::set<Permutation> next;
        for (const Permutation& z : level) {
            const auto& z_atoms = table.atoms[z];
            for (int i = 1; i < n; ++i) {
                auto up = involution_step_up(z, i);
                if (!up) continue;
                if (f == Flavor::Sp && !is_fixed_point_free(*up, n)) continue;
                auto& dest = table.atoms[*up];
                for (const Permutation& w : z_atoms) {
                    if (!has_right_descent(w, i)) { // keeps the word reduced
                        Permutation cand = right_mul_s(w, i);
                        if (std::find(dest.begin(), dest.end(), cand) == dest.end())
                            dest.push_back(cand);
                    }
                }
                next.insert(*up);
            }
        }
        level.assign(next.begin(), next.end());
    }
    for (auto& [z, v] : table.atoms) std::sort(v.begin(), v.end());
    return cache.emplace(key, std::move(table)).first->second;
}

} // namespace detail

/// Minimal-length permutations w with w^{-1} o 1^K o w = z.
inline const std::vector<Permutation>& atoms(const Involution& z) {
    int n = z.size();
    if (z.flavor() == Flavor::Sp && n % 2 != 0)
        throw std::invalid_argument("Sp atoms need even size");
    if (z.flavor() == Flavor::O && n == 0) n = 1;
    const auto& table = detail::atom_table(z.flavor(), n);
    auto it = table.atoms.find(z.perm());
    if (it == table.atoms.end()) throw std::logic_error("involution not reached by atom search");
    return it->second;
}

/// Reduced involution words: the union of R(w) over atoms w.
inline std::vector<Word> reduced_involution_words(const Involution& z) {
    std::vector<Word> out;
    for (const Permutation& w : atoms(z))
        for (const Word& a : reduced_words(w)) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

/// Common length of the reduced involution words; equals |D^K(z)|.
inline int involution_length(const Involution& z) {
    return static_cast<int>(involution_diagram(z.perm(), z.flavor()).size());
}

/// Row lengths of the flavor diagram, trailing zeros trimmed.
inline std::vector<int> involution_code(const Permutation& y, Flavor f) {
    int n = y.size();
    std::vector<int> c(n, 0);
    CellSet d = involution_diagram(y, f);
    for (const Cell& cell : d.cells()) c[cell.row - 1]++;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

inline Partition involution_shape(const Permutation& y, Flavor f) {
    return shape_of_code(involution_code(y, f));
}

enum class DearcSide { R, L };

/// Keeps the cycles (a_i,b_i) that have another cycle's right endpoint
/// (side R) or left endpoint (side L) strictly inside them; dropped
/// cycles become fixed points, so the result has flavor O.
inline Involution dearc(const Involution& z, DearcSide side) {
    if (!z.fixed_point_free() || z.flavor() != Flavor::Sp)
        throw std::invalid_argument("dearc needs a fixed-point-free Sp involution");
    auto cycles = two_cycles(z.perm());
    int n = z.size();
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    for (auto [a, b] : cycles) {
        bool keep = false;
        for (auto [a2, b2] : cycles) {
            int probe = side == DearcSide::R ? b2 : a2;
            if (a < probe && probe < b) { keep = true; break; }
        }
        if (keep) {
            line[a - 1] = b;
            line[b - 1] = a;
        }
    }
    return Involution::orthogonal(Permutation(std::move(line)));
}

/// 1^Sp_m x z (side left) or z x 1^Sp_m (side right); m must be even.
inline Involution sp_pad(const Involution& z, int m, bool left) {
    if (m % 2 != 0) throw std::invalid_argument("Sp padding block must have even size");
    Permutation block = fpf_minimal(m);
    Permutation p = left ? block_product(block, m, z.perm())
                         : block_product(z.perm(), z.size(), block);
    return Involution(std::move(p), z.flavor());
}

inline std::vector<Involution> all_involutions(int n) {
    std::vector<Involution> out;
    for (const auto& w : all_permutations(n))
        if (is_involution(w)) out.push_back(Involution::orthogonal(w));
    return out;
}

inline std::vector<Involution> all_fpf_involutions(int n) {
    std::vector<Involution> out;
    if (n % 2 != 0) return out;
    for (const auto& w : all_permutations(n))
        if (is_involution(w) && is_fixed_point_free(w, n))
            out.push_back(Involution::symplectic(w));
    return out;
}

} // namespace schubcalc
