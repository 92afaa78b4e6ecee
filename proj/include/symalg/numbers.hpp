#pragma once

#include <gmpxx.h>
#include <string>

namespace symalg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "7", "-3/4"
inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace symalg
