#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace schubcalc {

/// Matrix coordinates, (1,1) top-left.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// (i,j) precedes (i',j') in the southwest-to-northeast order
/// iff i >= i' and j <= j'.
inline bool sw_ne_leq(const Cell& a, const Cell& b) {
    return a.row >= b.row && a.col <= b.col;
}

class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    bool contains(const Cell& c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }
    const std::vector<Cell>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    /// Decides whether this set is totally ordered by sw_ne_leq.
    bool is_sw_ne_chain() const {
        for (size_t a = 0; a < cells_.size(); ++a)
            for (size_t b = a + 1; b < cells_.size(); ++b)
                if (!sw_ne_leq(cells_[a], cells_[b]) && !sw_ne_leq(cells_[b], cells_[a]))
                    return false;
        return true;
    }

    /// Elements sorted increasing along the sw-ne chain; throws if not a chain.
    std::vector<Cell> chain_sorted() const {
        if (!is_sw_ne_chain()) throw std::invalid_argument("essential set is not a sw-ne chain");
        std::vector<Cell> v = cells_;
        std::sort(v.begin(), v.end(), [](const Cell& a, const Cell& b) {
            if (a == b) return false;
            return sw_ne_leq(a, b);
        });
        return v;
    }

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    std::vector<Cell> cells_;
};

/// Southeast corners of connected components: cells with no right or
/// down neighbor in the set.
inline CellSet essential_set(const CellSet& d) {
    std::vector<Cell> out;
    for (const Cell& c : d.cells())
        if (!d.contains({c.row, c.col + 1}) && !d.contains({c.row + 1, c.col}))
            out.push_back(c);
    return CellSet(std::move(out));
}

/// Rothe diagram D(w) = {(i,j) : j < w(i), i < w^{-1}(j)}.
inline CellSet rothe_diagram(const Permutation& w) {
    int n = w.size();
    Permutation wi = w.inverse();
    std::vector<Cell> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < w(i); ++j)
            if (i < wi(j)) out.push_back({i, j});
    return CellSet(std::move(out));
}

enum class Flavor { O, Sp };

inline const char* flavor_name(Flavor f) { return f == Flavor::O ? "O" : "Sp"; }

/// D(y) cut to i >= j (orthogonal) or i > j (symplectic).
inline CellSet involution_diagram(const Permutation& y, Flavor f) {
    std::vector<Cell> out;
    CellSet d = rothe_diagram(y);
    for (const Cell& c : d.cells())
        if (f == Flavor::O ? c.row >= c.col : c.row > c.col) out.push_back(c);
    return CellSet(std::move(out));
}

/// Grid rendering in the usual figure style: '□' diagram cell, '■'
/// essential cell, '×' permutation point, '·' empty.
inline std::string render_diagram(const Permutation& w, const CellSet& d, int n = -1) {
    if (n < 0) n = std::max(w.size(), 1);
    CellSet ess = essential_set(d);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            Cell c{i, j};
            if (ess.contains(c)) out += "■";
            else if (d.contains(c)) out += "□";
            else if (w(i) == j) out += "×";
            else out += "·";
        }
        out += '\n';
    }
    return out;
}

} // namespace schubcalc
