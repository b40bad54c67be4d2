#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace schubcalc {

enum class Alphabet : uint8_t { X, Y };

/// One variable out of the two signed-index alphabets; index 0 is not a
/// letter. Canonical order: all X before all Y, then signed index ascending.
struct VarRef {
    Alphabet alphabet = Alphabet::X;
    int index = 1;

    VarRef() = default;
    VarRef(Alphabet a, int i) : alphabet(a), index(i) {
        if (i == 0) throw std::invalid_argument("variable index must be nonzero");
    }
    friend auto operator<=>(const VarRef&, const VarRef&) = default;

    std::string name() const {
        return (alphabet == Alphabet::X ? "x" : "y") + std::to_string(index);
    }
};

inline VarRef xv(int i) { return VarRef(Alphabet::X, i); }
inline VarRef yv(int i) { return VarRef(Alphabet::Y, i); }

/// Sorted exponent list; equal monomials compare equal structurally.
/// Term order: total degree ascending, then exponent vectors compared
/// lexicographically with larger exponents on earlier variables first,
/// so x1^2 precedes x1*x2 and constants come first.
struct Monomial {
    std::vector<std::pair<VarRef, int>> factors; // sorted by VarRef, exponents > 0

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first < b.factors[j].first) return true;  // a has the earlier letter
            if (b.factors[j].first < a.factors[i].first) return false;
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second > b.factors[j].second;
            ++i, ++j;
        }
        return i < a.factors.size();
    }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    int exponent(const VarRef& v) const {
        for (auto& [u, e] : factors)
            if (u == v) return e;
        return 0;
    }
    bool contains(const VarRef& v) const { return exponent(v) > 0; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first < b.factors[j].first) m.factors.push_back(a.factors[i++]);
        else if (b.factors[j].first < a.factors[i].first) m.factors.push_back(b.factors[j++]);
        else {
            m.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i, ++j;
        }
    }
    while (i < a.factors.size()) m.factors.push_back(a.factors[i++]);
    while (j < b.factors.size()) m.factors.push_back(b.factors[j++]);
    return m;
}

/// Sparse integer polynomial over the x/y letters. All arithmetic exact;
/// zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int>;

    Polynomial() = default;
    Polynomial(int c) { if (c != 0) terms_[Monomial{}] = c; }
    Polynomial(const Int& c) { if (c != 0) terms_[Monomial{}] = c; }
    explicit Polynomial(const VarRef& v) { terms_[Monomial{{{v, 1}}}] = 1; }

    static Polynomial variable(const VarRef& v) { return Polynomial(v); }
    static Polynomial monomial(Monomial m, Int c = 1) {
        Polynomial p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int constant_term() const { return coefficient(Monomial{}); }

    int degree() const { // max total degree; -1 for the zero polynomial
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous(int d) const {
        for (auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        check_budget();
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Degree-d part.
    Polynomial homogeneous_component(int d) const {
        Polynomial r;
        if (d < 0) return r;
        for (auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_[m] = c;
        return r;
    }

    /// Keep terms of degree <= d.
    Polynomial truncated(int d) const {
        Polynomial r;
        for (auto& [m, c] : terms_)
            if (m.degree() <= d) r.terms_[m] = c;
        return r;
    }

    /// Set every variable matched by pred to zero.
    Polynomial zero_out(const std::function<bool(const VarRef&)>& pred) const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            bool killed = false;
            for (auto& [v, e] : m.factors)
                if (pred(v)) { killed = true; break; }
            if (!killed) r.terms_[m] = c;
        }
        return r;
    }

    /// Rename variables; fn must be injective on the support.
    Polynomial rename(const std::function<VarRef(const VarRef&)>& fn) const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            Monomial m2;
            for (auto& [v, e] : m.factors) m2.factors.emplace_back(fn(v), e);
            std::sort(m2.factors.begin(), m2.factors.end());
            for (size_t i = 1; i < m2.factors.size(); ++i)
                if (m2.factors[i].first == m2.factors[i - 1].first)
                    throw std::logic_error("rename: map not injective on support");
            r.add_term(m2, c);
        }
        return r;
    }

    /// v -> -v for every variable matched by pred.
    Polynomial negate_vars(const std::function<bool(const VarRef&)>& pred) const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            int flips = 0;
            for (auto& [v, e] : m.factors)
                if (pred(v)) flips += e;
            r.terms_[m] = flips % 2 ? -c : c;
        }
        return r;
    }

    Polynomial swap_vars(const VarRef& a, const VarRef& b) const {
        return rename([&](const VarRef& v) { return v == a ? b : v == b ? a : v; });
    }

    // Optional CI guard: SCHUBCALC_MAX_TERMS caps the stored term count of
    // any single polynomial so exact-arithmetic runaways fail fast instead
    // of exhausting memory. 0 disables the cap.
    static long& term_budget() {
        static long cap = [] {
            const char* s = std::getenv("SCHUBCALC_MAX_TERMS");
            return s ? std::atol(s) : 0L;
        }();
        return cap;
    }
    static void set_term_budget(long cap) { term_budget() = cap; }

private:
    TermMap terms_;

    void check_budget() const {
        long cap = term_budget();
        if (cap > 0 && static_cast<long>(terms_.size()) > cap)
            throw std::runtime_error("SCHUBCALC_MAX_TERMS exceeded");
    }
};

// ---- symmetric generators ---------------------------------------------------

/// Elementary symmetric e_d on an explicit variable list.
inline Polynomial elementary(int d, const std::vector<VarRef>& vars) {
    if (d < 0) return Polynomial();
    if (d == 0) return Polynomial(1);
    int n = static_cast<int>(vars.size());
    if (d > n) return Polynomial();
    Polynomial out;
    std::vector<int> idx(d);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == d) {
            Monomial m;
            for (int k : idx) m.factors.emplace_back(vars[k], 1);
            std::sort(m.factors.begin(), m.factors.end());
            out.add_term(m, 1);
            return;
        }
        for (int k = start; k <= n - (d - pos); ++k) {
            idx[pos] = k;
            rec(pos + 1, k + 1);
        }
    };
    rec(0, 0);
    return out;
}

/// Complete homogeneous h_d on an explicit variable list.
inline Polynomial complete_homogeneous(int d, const std::vector<VarRef>& vars) {
    if (d < 0) return Polynomial();
    if (d == 0) return Polynomial(1);
    if (vars.empty()) return Polynomial();
    Polynomial out;
    std::vector<int> mult(vars.size(), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == static_cast<int>(vars.size()) - 1) {
            mult[pos] = left;
            Monomial m;
            for (size_t k = 0; k < vars.size(); ++k)
                if (mult[k] > 0) m.factors.emplace_back(vars[k], mult[k]);
            std::sort(m.factors.begin(), m.factors.end());
            out.add_term(m, 1);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            mult[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, d);
    return out;
}

// ---- divided differences ----------------------------------------------------

/// Exact quotient f / (a - b) by synthetic division in a over Z[rest];
/// throws if the remainder is nonzero (which would be an arithmetic bug
/// at every call site).
inline Polynomial exact_divide_by_difference(const Polynomial& f, const VarRef& a, const VarRef& b) {
    if (f.is_zero()) return f;
    // split f by degree in a
    std::map<int, Polynomial> by_deg;
    for (auto& [m, c] : f.terms()) {
        int da = m.exponent(a);
        Monomial rest;
        for (auto& [v, e] : m.factors)
            if (!(v == a)) rest.factors.emplace_back(v, e);
        by_deg[da].add_term(rest, c);
    }
    int dmax = by_deg.rbegin()->first;
    Polynomial pb = Polynomial::variable(b);
    // quotient coefficients q_{k-1} = c_k + b * q_k, descending
    Polynomial carry; // q_k while descending
    Polynomial quotient;
    for (int k = dmax; k >= 1; --k) {
        Polynomial ck = by_deg.count(k) ? by_deg[k] : Polynomial();
        Polynomial qk = ck + pb * carry;
        Polynomial apow = k > 1 ? Polynomial::monomial(Monomial{{{a, k - 1}}}) : Polynomial(1);
        quotient += qk * apow;
        carry = qk;
    }
    Polynomial c0 = by_deg.count(0) ? by_deg[0] : Polynomial();
    Polynomial remainder = c0 + pb * carry;
    if (!remainder.is_zero())
        throw std::logic_error("exact_divide_by_difference: nonzero remainder");
    return quotient;
}

/// (f - f with a,b exchanged) / (a - b). The ordinary operator acting on
/// x_i, x_{i+1} is the pair (xv(i), xv(i+1)); windowed alphabets pass
/// their own consecutive letters.
inline Polynomial divided_difference_pair(const Polynomial& f, const VarRef& a, const VarRef& b) {
    return exact_divide_by_difference(f - f.swap_vars(a, b), a, b);
}

/// Divided difference on the positive x alphabet; y letters are scalars.
inline Polynomial divided_difference(const Polynomial& f, int i) {
    if (i < 1) throw std::invalid_argument("divided_difference: index must be >= 1");
    return divided_difference_pair(f, xv(i), xv(i + 1));
}

// ---- index shifting (pad-and-shift windows) ----------------------------------

/// Positive index t -> t - m, skipping 0: letters 1..m land on -m..-1.
inline int shift_index_down(int t, int m) {
    if (t < 1) throw std::invalid_argument("shift_index_down expects positive indices");
    return t > m ? t - m : t - m - 1;
}

/// Inverse of shift_index_down: indices >= -m back to positives.
inline int shift_index_up(int s, int m) {
    if (s == 0 || s < -m) throw std::invalid_argument("shift_index_up: index out of window");
    return s > 0 ? s + m : s + m + 1;
}

inline Polynomial shift_down(const Polynomial& f, int m) {
    if (m == 0) return f;
    return f.rename([m](const VarRef& v) { return VarRef(v.alphabet, shift_index_down(v.index, m)); });
}

inline Polynomial shift_up(const Polynomial& f, int m) {
    if (m == 0) return f;
    return f.rename([m](const VarRef& v) { return VarRef(v.alphabet, shift_index_up(v.index, m)); });
}

/// The window alphabet x_{-m..cap} (or y), skipping 0.
inline std::vector<VarRef> window_vars(Alphabet a, int m, int cap) {
    std::vector<VarRef> v;
    for (int i = -m; i <= cap; ++i)
        if (i != 0) v.emplace_back(a, i);
    return v;
}

// ---- printing ----------------------------------------------------------------

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string body;
        for (auto& [v, e] : m.factors) {
            if (!body.empty()) body += "*";
            body += v.name();
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) out << a.str();
        else if (a == 1) out << body;
        else out << a.str() << "*" << body;
    }
    return out.str();
}

} // namespace schubcalc
