#pragma once

#include <functional>
#include <optional>

#include "partition.hpp"
#include "pfaffian.hpp"
#include "polynomial.hpp"
#include "series.hpp"

namespace schubcalc {

// ---- one- and two-row Q in a generic series family ----------------------------

/// Q_{(d)}(c) = c_d.
inline Polynomial q_row(int d, const TruncatedSeries& c) {
    if (d < 0) return Polynomial();
    return c.coeff(d);
}

/// Q_{(l1,l2)}(c1,c2) = c1_{l1} c2_{l2} + 2 Σ_{p=1}^{l2} (-1)^p c1_{l1+p} c2_{l2-p},
/// with Q_{(0,0)} = 0.
inline Polynomial q_pair(int l1, int l2, const TruncatedSeries& c1, const TruncatedSeries& c2) {
    if (l1 == 0 && l2 == 0) return Polynomial();
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("q_pair parts must be >= 0");
    if (c1.cap < l1 + l2 || c2.cap < std::max(l1, l2))
        throw std::invalid_argument("q_pair: series cap too small");
    Polynomial out = c1.coeff(l1) * c2.coeff(l2);
    for (int p = 1; p <= l2; ++p) {
        Polynomial term = c1.coeff(l1 + p) * c2.coeff(l2 - p);
        term += term;
        if (p % 2) out -= term;
        else out += term;
    }
    return out;
}

/// Even-length padding of a part sequence.
inline std::vector<int> even_pad(std::vector<int> seq) {
    if (seq.size() % 2) seq.push_back(0);
    return seq;
}

/// Q_lambda(c(1),...,c(l)) as the Pfaffian of the two-row values, with the
/// implicit series c(l+1) = 1 covering the padded slot. The sequence need
/// not be a partition; the literal Pfaffian is evaluated as given.
inline Polynomial q_lambda(const std::vector<int>& seq, const SeriesFamily& family) {
    if (static_cast<int>(seq.size()) != family.length())
        throw std::invalid_argument("q_lambda: sequence length must match the family length");
    if (seq.empty()) return Polynomial(1);

    auto series_at = [&](int k) -> TruncatedSeries {
        if (k <= family.length()) return family.entries[k - 1];
        int cap = 0;
        for (int v : seq) cap += std::abs(v);
        return constant_series(1, std::max(cap, 1));
    };

    std::vector<int> lam = even_pad(seq);
    int n = static_cast<int>(lam.size());
    SquareMatrix<Polynomial> a(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a[i][j] = q_pair(lam[i], lam[j], series_at(i + 1), series_at(j + 1));
            a[j][i] = -a[i][j];
        }
    return pfaffian(a);
}

/// P_lambda = 2^{-ℓ(λ)} Q_lambda; all coefficients must divide exactly.
inline Polynomial p_lambda(const std::vector<int>& seq, const SeriesFamily& family) {
    Polynomial q = q_lambda(seq, family);
    int ell = 0;
    for (int v : seq)
        if (v != 0) ++ell;
    Int denom = pow2(ell);
    Polynomial out;
    for (auto& [m, c] : q.terms()) {
        if (c % denom != 0)
            throw std::logic_error("p_lambda: coefficient not divisible by 2^l");
        out.add_term(m, c / denom);
    }
    return out;
}

/// The classical family: every c(k) is Π (1+x)/(1-x) over the given letters.
inline SeriesFamily classical_family(const std::vector<VarRef>& vars, int count, int cap) {
    TruncatedSeries s = ratio_series(vars, vars, cap);
    return SeriesFamily(std::vector<TruncatedSeries>(count, s));
}

/// Sorts an arbitrary nonnegative sequence to a strict partition with the
/// sign of the stable sort (adjacent exchanges alternate, trailing zeros
/// drop silently); repeated positive parts make the value zero.
inline std::optional<std::pair<Partition, int>> normalize_to_strict(const std::vector<int>& seq) {
    for (int v : seq)
        if (v < 0) throw std::invalid_argument("parts must be >= 0");
    int inversions = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] < seq[j]) ++inversions;
            if (seq[i] == seq[j] && seq[i] > 0) return std::nullopt;
        }
    Partition sorted;
    for (int v : seq)
        if (v > 0) sorted.push_back(v);
    std::sort(sorted.rbegin(), sorted.rend());
    return std::make_pair(std::move(sorted), inversions % 2 ? -1 : 1);
}

/// Classical Q over an explicit alphabet, defined on arbitrary sequences
/// through the sign normalization above.
inline Polynomial q_lambda_classical(const std::vector<int>& seq, const std::vector<VarRef>& vars) {
    auto norm = normalize_to_strict(seq);
    if (!norm) return Polynomial();
    auto& [lam, sign] = *norm;
    int cap = 0;
    for (int v : lam) cap += v;
    Polynomial q = q_lambda(lam, classical_family(vars, static_cast<int>(lam.size()), std::max(cap, 1)));
    return sign < 0 ? -q : q;
}

inline Polynomial p_lambda_classical(const std::vector<int>& seq, const std::vector<VarRef>& vars) {
    auto norm = normalize_to_strict(seq);
    if (!norm) return Polynomial();
    auto& [lam, sign] = *norm;
    int cap = 0;
    for (int v : lam) cap += v;
    Polynomial p = p_lambda(lam, classical_family(vars, static_cast<int>(lam.size()), std::max(cap, 1)));
    return sign < 0 ? -p : p;
}

// ---- marked shifted tableaux ---------------------------------------------------

struct ShiftedCell {
    int row, col; // 1-based, col in [row, row+lambda_row-1]
};

inline std::vector<ShiftedCell> shifted_diagram(const StrictPartition& lambda) {
    std::vector<ShiftedCell> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i; j <= i + lambda[i - 1] - 1; ++j) cells.push_back({i, j});
    return cells;
}

/// Entries are (letter index into an ordered alphabet, primed flag); the
/// order is 1' < 1 < 2' < 2 < ... encoded as 2*idx - primed. Fillings are
/// weakly increasing along rows and columns, no unprimed letter repeats in
/// a column, no primed letter repeats in a row. `allowed` can restrict the
/// marks available for each letter (bit 1: unprimed, bit 2: primed).
/// Enumeration is column-by-column backtracking.
template <class F>
inline void for_each_marked_shifted_tableau(const StrictPartition& lambda, int nletters, F&& emit,
                                            const std::vector<int>* allowed = nullptr) {
    auto cells = shifted_diagram(lambda);
    if (cells.empty()) {
        emit(std::vector<std::pair<int, bool>>{});
        return;
    }
    std::sort(cells.begin(), cells.end(), [](const ShiftedCell& a, const ShiftedCell& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    int ncells = static_cast<int>(cells.size());
    // index of a cell in the sorted order, for neighbor lookups
    std::map<std::pair<int, int>, int> pos;
    for (int t = 0; t < ncells; ++t) pos[{cells[t].row, cells[t].col}] = t;

    std::vector<std::pair<int, bool>> fill(ncells); // (letter 1-based, primed)
    auto code = [](std::pair<int, bool> e) { return 2 * e.first - (e.second ? 1 : 0); };
    auto mark_ok = [&](int letter, bool primed) {
        if (!allowed) return true;
        int mask = (*allowed)[letter - 1];
        return primed ? (mask & 2) != 0 : (mask & 1) != 0;
    };

    std::function<void(int)> rec = [&](int t) {
        if (t == ncells) {
            // report in row-major order of the shifted diagram
            std::vector<std::pair<int, bool>> row_major;
            for (int i = 1; i <= lambda.length(); ++i)
                for (int j = i; j <= i + lambda[i - 1] - 1; ++j)
                    row_major.push_back(fill[pos.at({i, j})]);
            emit(row_major);
            return;
        }
        const ShiftedCell& c = cells[t];
        auto left = pos.find({c.row, c.col - 1});
        auto up = pos.find({c.row - 1, c.col});
        for (int letter = 1; letter <= nletters; ++letter)
            for (bool primed : {true, false}) {
                if (!mark_ok(letter, primed)) continue;
                std::pair<int, bool> e{letter, primed};
                if (left != pos.end()) {
                    auto& L = fill[left->second];
                    if (code(L) > code(e)) continue;
                    if (L == e && primed) continue; // primed repeat in a row
                }
                if (up != pos.end()) {
                    auto& U = fill[up->second];
                    if (code(U) > code(e)) continue;
                    if (U == e && !primed) continue; // unprimed repeat in a column
                }
                fill[t] = e;
                rec(t + 1);
            }
    };
    rec(0);
}

/// Monomial expansion of the Schur Q-function over an explicit alphabet.
inline Polynomial q_lambda_tableaux(const StrictPartition& lambda, const std::vector<VarRef>& vars) {
    Polynomial out;
    for_each_marked_shifted_tableau(lambda, static_cast<int>(vars.size()),
                                    [&](const std::vector<std::pair<int, bool>>& fill) {
                                        std::map<VarRef, int> exps;
                                        for (auto& [letter, primed] : fill) exps[vars[letter - 1]]++;
                                        Monomial m;
                                        for (auto& [v, e] : exps) m.factors.emplace_back(v, e);
                                        out.add_term(m, 1);
                                    });
    return out;
}

inline Polynomial p_lambda_tableaux(const StrictPartition& lambda, const std::vector<VarRef>& vars) {
    Polynomial q = q_lambda_tableaux(lambda, vars);
    Int denom = pow2(lambda.length());
    Polynomial out;
    for (auto& [m, c] : q.terms()) {
        if (c % denom != 0) throw std::logic_error("p_lambda_tableaux: not divisible");
        out.add_term(m, c / denom);
    }
    return out;
}

/// Multiparameter Schur Q-function: the shifted-tableau sum of products
/// (x_letter - sign * t_{col-row+1}), sign +1 for unprimed entries and -1
/// for primed ones. Needs at least λ_1 parameters.
inline Polynomial multiparameter_q(const StrictPartition& lambda, const std::vector<VarRef>& vars,
                                   const std::vector<Polynomial>& t) {
    if (!lambda.empty() && static_cast<int>(t.size()) < lambda[0])
        throw std::invalid_argument("multiparameter_q: need at least lambda_1 parameters");
    auto cells = shifted_diagram(lambda);
    Polynomial out;
    for_each_marked_shifted_tableau(
        lambda, static_cast<int>(vars.size()), [&](const std::vector<std::pair<int, bool>>& fill) {
            Polynomial prod(1);
            for (size_t idx = 0; idx < cells.size(); ++idx) {
                auto& [letter, primed] = fill[idx];
                int diag = cells[idx].col - cells[idx].row + 1;
                Polynomial factor = Polynomial::variable(vars[letter - 1]);
                const Polynomial& tj = t[diag - 1];
                if (primed) factor += tj;
                else factor -= tj;
                prod *= factor;
            }
            out += prod;
        });
    return out;
}

// ---- triangular expansion in the Q basis ---------------------------------------

namespace detail {

/// Leading exponent vector under lex with x_1 > x_2 > ... (positive x letters).
inline std::optional<std::pair<Monomial, Int>> lex_leading(const Polynomial& f, int nvars) {
    std::optional<std::pair<Monomial, Int>> best;
    auto expvec = [&](const Monomial& m) {
        std::vector<int> e(nvars, 0);
        for (auto& [v, k] : m.factors) {
            if (v.alphabet != Alphabet::X || v.index < 1 || v.index > nvars)
                throw std::invalid_argument("expand_in_schur_q: letters must be x_1..x_N");
            e[v.index - 1] = k;
        }
        return e;
    };
    for (auto& [m, c] : f.terms()) {
        if (!best) { best = {m, c}; continue; }
        if (expvec(m) > expvec(best->first)) best = {m, c};
    }
    return best;
}

} // namespace detail

/// Expands a symmetric polynomial in x_1..x_N in the Schur Q basis by
/// triangular elimination against the leading monomials 2^{ℓ(λ)} x^λ.
/// Throws if a leading exponent is not a strict partition or a coefficient
/// fails to divide; the caller checks nonnegativity.
inline std::map<Partition, Int> expand_in_schur_q(Polynomial f, int nvars) {
    std::map<Partition, Int> out;
    int guard = 0;
    while (!f.is_zero()) {
        if (++guard > 100000) throw std::logic_error("expand_in_schur_q: no progress");
        auto lead = detail::lex_leading(f, nvars);
        std::vector<int> expvec(nvars, 0);
        for (auto& [v, e] : lead->first.factors) expvec[v.index - 1] = e;
        while (!expvec.empty() && expvec.back() == 0) expvec.pop_back();
        Partition lam = expvec;
        if (!lam.empty() && !is_strict_partition(lam))
            throw std::invalid_argument("expand_in_schur_q: leading shape not a strict partition");
        Int denom = pow2(static_cast<unsigned>(lam.size()));
        if (lead->second % denom != 0)
            throw std::invalid_argument("expand_in_schur_q: coefficient not divisible by 2^l");
        Int b = lead->second / denom;
        std::vector<VarRef> vars;
        for (int i = 1; i <= nvars; ++i) vars.push_back(xv(i));
        Polynomial basis = lam.empty() ? Polynomial(1)
                                       : q_lambda_tableaux(StrictPartition(lam), vars);
        f -= Polynomial(b) * basis;
        out[lam] += b;
    }
    return out;
}

} // namespace schubcalc
