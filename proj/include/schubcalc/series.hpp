#pragma once

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace schubcalc {

/// A power series known up to total degree `cap`, stored as its truncation.
struct TruncatedSeries {
    Polynomial poly;
    int cap = 0;

    TruncatedSeries() = default;
    TruncatedSeries(Polynomial p, int c) : poly(p.truncated(c)), cap(c) {}

    Polynomial coeff(int d) const {
        if (d > cap) throw std::invalid_argument("TruncatedSeries: degree beyond cap");
        return poly.homogeneous_component(d);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int c = std::min(a.cap, b.cap);
        return TruncatedSeries((a.poly * b.poly).truncated(c), c);
    }
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int c = std::min(a.cap, b.cap);
        return TruncatedSeries((a.poly + b.poly).truncated(c), c);
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.cap == b.cap && a.poly == b.poly;
    }
};

inline TruncatedSeries constant_series(int value, int cap) {
    return TruncatedSeries(Polynomial(value), cap);
}

/// Π (1+u) over numerator letters divided by Π (1-v) over denominator
/// letters, expanded to total degree cap. The degree-d coefficient equals
/// Σ_{a+b=d} e_a(numerator) h_b(denominator).
inline TruncatedSeries ratio_series(const std::vector<VarRef>& numerator,
                                    const std::vector<VarRef>& denominator, int cap) {
    Polynomial p(1);
    for (const VarRef& u : numerator)
        p = (p * (Polynomial(1) + Polynomial(u))).truncated(cap);
    for (const VarRef& v : denominator) {
        Polynomial geo(1);
        Polynomial pv(v), pw(1);
        for (int k = 1; k <= cap; ++k) {
            pw = pw * pv;
            geo += pw;
        }
        p = (p * geo).truncated(cap);
    }
    return TruncatedSeries(std::move(p), cap);
}

/// Ordered list c(1..ℓ) of series with constant term 1; c(ℓ+1) is the
/// constant series 1.
struct SeriesFamily {
    std::vector<TruncatedSeries> entries;

    SeriesFamily() = default;
    explicit SeriesFamily(std::vector<TruncatedSeries> e) : entries(std::move(e)) {
        for (const auto& s : entries)
            if (s.poly.constant_term() != 1)
                throw std::invalid_argument("series family entries need constant term 1");
    }

    int length() const { return static_cast<int>(entries.size()); }

    /// 1-based; index length()+1 is the implicit constant 1.
    Polynomial coeff(int k, int d) const {
        if (d < 0) return Polynomial();
        if (k >= 1 && k <= length()) return entries[k - 1].coeff(d);
        if (k == length() + 1) return d == 0 ? Polynomial(1) : Polynomial();
        throw std::out_of_range("series family index");
    }
};

} // namespace schubcalc
