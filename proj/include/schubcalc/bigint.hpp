#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace schubcalc {

using Int = boost::multiprecision::cpp_int;

inline Int pow2(unsigned k) { return Int(1) << k; }

// Exact division; the callers use this where divisibility is a theorem,
// so a failure means the computation upstream is wrong.
inline Int exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a)
        throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

} // namespace schubcalc
