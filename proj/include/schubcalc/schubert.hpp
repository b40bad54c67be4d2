#pragma once

#include <climits>
#include <map>
#include <mutex>

#include "permutation.hpp"
#include "polynomial.hpp"

namespace schubcalc {

/// A polynomial whose letters live in the window alphabet [-m..]\{0}.
struct WindowedPolynomial {
    Polynomial poly;
    int window = 0;
    friend bool operator==(const WindowedPolynomial&, const WindowedPolynomial&) = default;
};

/// Compatible sequences for a word: weakly increasing nonzero indices
/// i_1 <= ... <= i_l with i_j <= a_j, strictly increasing across ascents
/// of the word. Bounds: lo <= i_j <= hi (hi = INT_MAX for unbounded).
inline std::vector<std::vector<int>> compatible_sequences(const Word& a, int lo, int hi = INT_MAX) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(a.size());
    std::function<void(size_t, int)> rec = [&](size_t j, int minv) {
        if (j == a.size()) {
            out.push_back(cur);
            return;
        }
        int cap = std::min(a[j], hi);
        for (int i = minv; i <= cap; ++i) {
            if (i == 0) continue;
            cur[j] = i;
            int next_min = (j + 1 < a.size() && a[j] < a[j + 1]) ? i + 1 : i;
            rec(j + 1, next_min == 0 ? 1 : next_min);
        }
    };
    rec(0, lo);
    return out;
}

namespace detail {

/// Sum of x_{i_1}...x_{i_l} over compatible sequences, accumulated directly.
inline Polynomial compatible_sum(const Word& a, int lo, int hi = INT_MAX) {
    Polynomial out;
    if (a.empty()) return Polynomial(1);
    // exponent run-length list built in weakly increasing index order
    std::vector<std::pair<int, int>> runs;
    std::function<void(size_t, int)> rec = [&](size_t j, int minv) {
        if (j == a.size()) {
            Monomial m;
            m.factors.reserve(runs.size());
            for (auto& [idx, e] : runs) m.factors.emplace_back(xv(idx), e);
            out.add_term(m, 1);
            return;
        }
        int cap = std::min(a[j], hi);
        for (int i = minv; i <= cap; ++i) {
            if (i == 0) continue;
            if (!runs.empty() && runs.back().first == i) runs.back().second++;
            else runs.emplace_back(i, 1);
            int next_min = (j + 1 < a.size() && a[j] < a[j + 1]) ? i + 1 : i;
            rec(j + 1, next_min == 0 ? 1 : next_min);
            if (runs.back().second == 1) runs.pop_back();
            else runs.back().second--;
        }
    };
    rec(0, lo);
    return out;
}

template <class Key>
class PolyCache {
public:
    template <class F>
    const Polynomial& get(const Key& k, F&& compute) {
        std::lock_guard<std::recursive_mutex> lock(mtx_);
        auto it = map_.find(k);
        if (it != map_.end()) return it->second;
        Polynomial p = compute();
        return map_.emplace(k, std::move(p)).first->second;
    }

private:
    std::map<Key, Polynomial> map_;
    std::recursive_mutex mtx_;
};

} // namespace detail

/// Schubert polynomial at window m by the compatible-sequence definition:
/// the sum over reduced words and compatible sequences with indices >= -m.
/// m = 0 is the ordinary Schubert polynomial.
inline Polynomial schubert_bjs(const Permutation& w, int m = 0) {
    if (m < 0) throw std::invalid_argument("window must be >= 0");
    static detail::PolyCache<std::pair<Permutation, int>> cache;
    return cache.get({w, m}, [&] {
        Polynomial out;
        for (const Word& a : reduced_words(w)) out += detail::compatible_sum(a, -m);
        return out;
    });
}

/// Stanley symmetric function restricted to the window letters x_{-m..-1}.
inline Polynomial stanley_sym(const Permutation& w, int m) {
    if (m < 1) throw std::invalid_argument("stanley window must be >= 1");
    static detail::PolyCache<std::pair<Permutation, int>> cache;
    return cache.get({w, m}, [&] {
        Polynomial out;
        for (const Word& a : reduced_words(w)) out += detail::compatible_sum(a, -m, -1);
        return out;
    });
}

/// Ordinary Schubert polynomial by divided differences from the staircase
/// monomial x_1^{n-1} x_2^{n-2} ... of the longest element.
inline Polynomial schubert_dd(const Permutation& w) {
    static detail::PolyCache<Permutation> cache;
    return cache.get(w, [&]() -> Polynomial {
        int n = w.size();
        if (w == Permutation::longest(n)) {
            Monomial m;
            for (int i = 1; i < n; ++i) m.factors.emplace_back(xv(i), n - i);
            return Polynomial::monomial(std::move(m));
        }
        for (int i = 1; i < n; ++i)
            if (!has_right_descent(w, i))
                return divided_difference(schubert_dd(right_mul_s(w, i)), i);
        throw std::logic_error("unreachable: non-longest element has an ascent");
    });
}

/// Fast windowed Schubert polynomial: the one for 1_m x w with indices
/// shifted down so they land in [-m..]\{0}. Agrees with schubert_bjs
/// (that equivalence is one of the verification suites).
inline Polynomial schubert_window(const Permutation& w, int m) {
    if (m == 0) return schubert_dd(w);
    static detail::PolyCache<std::pair<Permutation, int>> cache;
    return cache.get({w, m}, [&] { return shift_down(schubert_dd(pad_left(w, m)), m); });
}

/// Double Schubert polynomial at window m: the signed sum over
/// length-additive factorizations u v = w of S_{u^{-1}}(y) S_v(x).
inline Polynomial double_schubert(const Permutation& w, int m = 0) {
    static detail::PolyCache<std::pair<Permutation, int>> cache;
    return cache.get({w, m}, [&] {
        Polynomial out;
        int lw = length(w);
        for (const Permutation& u : all_permutations(std::max(w.size(), 1))) {
            Permutation v = compose(u.inverse(), w);
            if (length(u) + length(v) != lw) continue;
            Polynomial yside = schubert_window(u.inverse(), m).rename([](const VarRef& r) {
                return VarRef(Alphabet::Y, r.index);
            });
            Polynomial term = yside * schubert_window(v, m);
            if (length(u) % 2) out -= term;
            else out += term;
        }
        return out;
    });
}

/// The letters of the window alphabet [-m..cap]\{0} in increasing order.
inline std::vector<int> window_letters(int m, int cap) {
    std::vector<int> v;
    for (int i = -m; i <= cap; ++i)
        if (i != 0) v.push_back(i);
    return v;
}

struct RecurrenceCheck {
    bool pass = false;
    Polynomial lhs, rhs;
    std::string detail;
};

/// Divided-difference recurrence for windowed Schubert polynomials, at
/// window pair position pos (1-based among consecutive window letters).
/// Pairs inside the negative tail or across the sign boundary must give 0;
/// the positive pair (x_i, x_{i+1}) must give the polynomial of w s_i when
/// that is shorter, else 0.
inline RecurrenceCheck check_schubert_recurrence(const Permutation& w, int m, int pos,
                                                 bool use_double = false, int ambient = -1) {
    int n = ambient > 0 ? ambient : std::max(w.size(), 2);
    std::vector<int> letters = window_letters(m, n);
    if (pos < 1 || pos + 1 > static_cast<int>(letters.size()))
        throw std::invalid_argument("pair position out of range");
    VarRef a = xv(letters[pos - 1]), b = xv(letters[pos]);
    Polynomial f = use_double ? double_schubert(w, m) : schubert_bjs(w, m);

    RecurrenceCheck r;
    r.lhs = divided_difference_pair(f, a, b);
    int i = letters[pos - 1];
    if (i >= 1 && has_right_descent(w, i)) {
        Permutation ws = right_mul_s(w, i);
        r.rhs = use_double ? double_schubert(ws, m) : schubert_bjs(ws, m);
        r.detail = "descent";
    } else {
        r.detail = i >= 1 ? "ascent" : "window tail";
    }
    r.pass = (r.lhs == r.rhs);
    return r;
}

} // namespace schubcalc
