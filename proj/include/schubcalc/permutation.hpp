#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubcalc {

using Word = std::vector<int>; // letters are simple-reflection indices, 1-based

/// A permutation of {1,2,...} with finite support, stored in one-line
/// notation. Trailing fixed points are trimmed, so S_n sits inside
/// S_{n+1} transparently: w and w x 1 compare equal.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> oneline) : line_(std::move(oneline)) {
        validate();
        trim();
    }

    static Permutation identity() { return Permutation(); }

    static Permutation simple(int i) {
        if (i < 1) throw std::invalid_argument("simple reflection index must be >= 1");
        std::vector<int> v(i + 1);
        std::iota(v.begin(), v.end(), 1);
        std::swap(v[i - 1], v[i]);
        return Permutation(std::move(v));
    }

    /// n(n-1)...21, the longest element of S_n.
    static Permutation longest(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(line_.size()); }

    /// w(i) for any i >= 1; fixed beyond the stored window.
    int operator()(int i) const {
        if (i < 1) throw std::out_of_range("permutation argument must be >= 1");
        return i <= size() ? line_[i - 1] : i;
    }

    const std::vector<int>& oneline() const { return line_; }

    std::vector<int> oneline(int n) const {
        std::vector<int> v(n);
        for (int i = 1; i <= n; ++i) v[i - 1] = (*this)(i);
        return v;
    }

    Permutation inverse() const {
        std::vector<int> v(line_.size());
        for (int i = 1; i <= size(); ++i) v[line_[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }

    bool is_identity() const { return line_.empty(); }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.line_ == b.line_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        int n = std::max(a.size(), b.size());
        for (int i = 1; i <= n; ++i) {
            if (auto c = a(i) <=> b(i); c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<int> line_;

    void validate() const {
        std::vector<char> seen(line_.size() + 1, 0);
        for (int v : line_) {
            if (v < 1 || v > size() || seen[v])
                throw std::invalid_argument("not a permutation in one-line notation");
            seen[v] = 1;
        }
    }
    void trim() {
        while (!line_.empty() && line_.back() == static_cast<int>(line_.size())) line_.pop_back();
    }
};

/// (u v)(i) = u(v(i)); sizes auto-pad.
inline Permutation compose(const Permutation& u, const Permutation& v) {
    int n = std::max(u.size(), v.size());
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
}

inline Permutation right_mul_s(const Permutation& w, int i) { return compose(w, Permutation::simple(i)); }
inline Permutation left_mul_s(const Permutation& w, int i) { return compose(Permutation::simple(i), w); }

/// Number of inversions #{i<j : w(i)>w(j)}.
inline int length(const Permutation& w) {
    int n = w.size(), inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

inline bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

/// Demazure (0-Hecke) product: w o s_i absorbs length-decreasing letters.
inline Permutation demazure_mul_s(const Permutation& w, int i) {
    return has_right_descent(w, i) ? w : right_mul_s(w, i);
}

inline Word reduced_word_of(const Permutation& w); // below

inline Permutation demazure(const Permutation& u, const Permutation& v) {
    Permutation r = u;
    for (int c : reduced_word_of(v)) r = demazure_mul_s(r, c);
    return r;
}

/// One reduced word, built by peeling left descents.
inline Word reduced_word_of(const Permutation& w) {
    Word word;
    Permutation v = w;
    while (!v.is_identity()) {
        Permutation vi = v.inverse();
        for (int i = 1; i <= v.size(); ++i) {
            if (vi(i) > vi(i + 1)) { // left descent
                word.push_back(i);
                v = left_mul_s(v, i);
                break;
            }
        }
    }
    return word;
}

/// All reduced words of w (complete enumeration via right-descent recursion).
/// Results are cached; the std::map keeps node addresses stable.
inline const std::vector<Word>& reduced_words(const Permutation& w) {
    static std::map<Permutation, std::vector<Word>> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);

    auto it = cache.find(w);
    if (it != cache.end()) return it->second;

    std::vector<Word> out;
    if (w.is_identity()) {
        out.push_back({});
    } else {
        for (int i = 1; i <= w.size() - 1; ++i) {
            if (!has_right_descent(w, i)) continue;
            for (Word a : reduced_words(right_mul_s(w, i))) {
                a.push_back(i);
                out.push_back(std::move(a));
            }
        }
        std::sort(out.begin(), out.end());
    }
    return cache.emplace(w, std::move(out)).first->second;
}

inline Permutation permutation_of_word(const Word& a) {
    Permutation w;
    for (int c : a) w = right_mul_s(w, c);
    return w;
}

/// v x w: v on [1,m], shifted w above.
inline Permutation block_product(const Permutation& v, int m, const Permutation& w) {
    if (v.size() > m) throw std::invalid_argument("block_product: left block too small");
    int n = m + w.size();
    std::vector<int> line(n);
    for (int i = 1; i <= m; ++i) line[i - 1] = v(i);
    for (int i = 1; i <= w.size(); ++i) line[m + i - 1] = w(i) + m;
    return Permutation(std::move(line));
}

/// 1_m x w.
inline Permutation pad_left(const Permutation& w, int m) {
    return block_product(Permutation::identity(), m, w);
}

/// #{a <= i : w(a) <= j}, the rank of the upper-left i x j corner.
inline int rank_submatrix(const Permutation& w, int i, int j) {
    if (i < 0 || j < 0) throw std::out_of_range("rank_submatrix: negative index");
    int r = 0;
    for (int a = 1; a <= i; ++a)
        if (w(a) <= j) ++r;
    return r;
}

/// Code c_i(w) = #{j>i : w(j)<w(i)}, trailing zeros trimmed.
inline std::vector<int> code(const Permutation& w) {
    int n = w.size();
    std::vector<int> c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++c[i - 1];
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

/// True iff some i<j<k<l has w(j)<w(i)<w(l)<w(k) (a 2143 pattern).
inline bool contains_2143(const Permutation& w) {
    int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (w(j) >= w(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (w(k) <= w(i)) continue;
                for (int l = k + 1; l <= n; ++l)
                    if (w(i) < w(l) && w(l) < w(k)) return true;
            }
        }
    return false;
}

inline bool is_vexillary(const Permutation& w) { return !contains_2143(w); }

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(line);
    while (std::next_permutation(line.begin(), line.end()));
    return out;
}

// ---- parsing / printing ----------------------------------------------------

/// Accepts "3 5 1 4 2", "3,5,1,4,2", compact "35142" (all values < 10),
/// or cycle notation "(1,5)(2,4)".
inline Permutation parse_permutation(const std::string& s) {
    auto fail = [&]() { throw std::invalid_argument("cannot parse permutation: " + s); };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return Permutation();

    if (t[0] == '(') {
        std::vector<std::pair<int, int>> moves;
        size_t pos = 0;
        int n = 0;
        std::vector<std::vector<int>> cycles;
        while (pos < t.size()) {
            if (t[pos] != '(') fail();
            size_t close = t.find(')', pos);
            if (close == std::string::npos) fail();
            std::string body = t.substr(pos + 1, close - pos - 1);
            std::vector<int> cyc;
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) fail();
                cyc.push_back(std::stoi(item));
            }
            if (cyc.size() < 2) fail();
            cycles.push_back(cyc);
            for (int v : cyc) n = std::max(n, v);
            pos = close + 1;
        }
        std::vector<int> line(n);
        std::iota(line.begin(), line.end(), 1);
        for (const auto& cyc : cycles)
            for (size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (from < 1) fail();
                if (line[from - 1] != from) throw std::invalid_argument("overlapping cycles: " + s);
                line[from - 1] = to;
            }
        return Permutation(std::move(line));
    }

    std::vector<int> vals;
    if (t.find(',') != std::string::npos) {
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(std::stoi(item));
    } else if (s.find(' ') != std::string::npos) {
        std::stringstream ss(s);
        int v;
        while (ss >> v) vals.push_back(v);
    } else {
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

inline std::string to_oneline_string(const Permutation& w, int n = -1) {
    if (n < 0) n = std::max(w.size(), 1);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(w(i));
    }
    return out;
}

inline std::string to_cycle_string(const Permutation& w) {
    std::string out;
    std::vector<char> seen(w.size() + 1, 0);
    for (int i = 1; i <= w.size(); ++i) {
        if (seen[i] || w(i) == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ',';
            out += std::to_string(j);
            first = false;
            j = w(j);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

} // namespace schubcalc
