#pragma once

#include <string>

#include "symalg/monomial.hpp"

namespace symalg {

// Total multiplicative well-orders on monomials. block(k) compares the first
// k variables lexicographically and breaks ties by grevlex on the rest; it is
// an elimination order for the first k variables.
struct MonomialOrder {
    enum class Kind { lex, grevlex, block };
    Kind kind = Kind::grevlex;
    int block_size = 0; // only for Kind::block

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block(int k) { return {Kind::block, k}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block || block_size == o.block_size);
    }

    std::string name() const {
        switch (kind) {
        case Kind::lex: return "lex";
        case Kind::grevlex: return "grevlex";
        case Kind::block: return "block(" + std::to_string(block_size) + ")";
        }
        return "?";
    }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Exponents& a, const Exponents& b) const {
        switch (kind) {
        case Kind::lex: return cmp_lex(a, b, 0, a.size());
        case Kind::grevlex: return cmp_grevlex(a, b, 0, a.size());
        case Kind::block: {
            size_t k = static_cast<size_t>(block_size);
            if (k > a.size()) k = a.size();
            if (int c = cmp_lex(a, b, 0, k)) return c;
            return cmp_grevlex(a, b, k, a.size());
        }
        }
        return 0;
    }

    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
    bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

private:
    static int cmp_lex(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static int cmp_grevlex(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
        int64_t da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da < db ? -1 : 1;
        // equal degree: larger = smaller exponent in the last position where they differ
        for (size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
};

} // namespace symalg
