#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubcalc {

using Partition = std::vector<int>; // weakly decreasing, positive parts

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline bool is_strict_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] >= p[i - 1]) return false;
    }
    return true;
}

/// λ_1 > λ_2 > ... > λ_ℓ > 0.
struct StrictPartition {
    Partition parts;

    StrictPartition() = default;
    explicit StrictPartition(Partition p) : parts(std::move(p)) {
        if (!is_strict_partition(parts))
            throw std::invalid_argument("parts must be strictly decreasing and positive");
    }

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool empty() const { return parts.empty(); }
    int operator[](int i) const { return parts.at(i); } // 0-based

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
};

/// λ ⊆ μ componentwise.
inline bool contained_in(const Partition& lam, const Partition& mu) {
    if (lam.size() > mu.size()) return false;
    for (size_t i = 0; i < lam.size(); ++i)
        if (lam[i] > mu[i]) return false;
    return true;
}

inline Partition transpose(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    Partition t;
    for (int k = 1; !p.empty() && k <= p[0]; ++k) {
        int count = 0;
        for (int v : p)
            if (v >= k) ++count;
        t.push_back(count);
    }
    return t;
}

/// Sort the nonzero entries of a code decreasingly and transpose.
inline Partition shape_of_code(const std::vector<int>& code) {
    Partition nz;
    for (int v : code)
        if (v != 0) nz.push_back(v);
    return transpose(std::move(nz));
}

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

inline Partition parse_partition(const std::string& s) {
    Partition p;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ' || c == '(' || c == ')') {
            if (!cur.empty()) p.push_back(std::stoi(cur));
            cur.clear();
        } else cur += c;
    }
    return p;
}

} // namespace schubcalc
