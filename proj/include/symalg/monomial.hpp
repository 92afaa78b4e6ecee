#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "symalg/error.hpp"

namespace symalg {

// Exponent vector of a monomial. Entries are >= 0; length is the number of
// ring variables. Componentwise arithmetic is overflow-checked.
using Exponents = std::vector<int64_t>;

inline int64_t total_degree(const Exponents& e) {
    int64_t d = 0;
    for (int64_t x : e) d += x;
    return d;
}

inline Exponents exp_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] < 0) throw ResourceLimitError("exponent overflow");
    }
    return r;
}

inline bool exp_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// b / a, requires a | b
inline Exponents exp_div(const Exponents& b, const Exponents& a) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponents exp_gcd(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline Exponents exp_pow(const Exponents& a, int64_t n) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * n;
        if (n != 0 && r[i] / n != a[i]) throw ResourceLimitError("exponent overflow");
    }
    return r;
}

inline bool exp_coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool exp_is_squarefree(const Exponents& a) {
    for (int64_t x : a)
        if (x > 1) return false;
    return true;
}

} // namespace symalg
