#pragma once

#include <optional>

#include "symalg/monomial_ideal.hpp"

namespace symalg {

enum class Certainty { exact, lower_bound };

struct SymbolicPowerResult {
    Ideal ideal;
    int64_t n = 0;
    Certainty certainty = Certainty::exact;
    std::optional<Polynomial> witness;
};

// Exact symbolic power of a squarefree monomial ideal: the intersection of
// P^n over the minimal primes P. A monomial x^v lies in it iff every minimal
// vertex cover P satisfies sum_{j in P} v_j >= n.
MonomialIdeal symbolic_power_squarefree_monomial(const MonomialIdeal& M, int64_t n,
                                                 const Limits& lim = {});
SymbolicPowerResult symbolic_power_squarefree(const MonomialIdeal& M, int64_t n,
                                              const Limits& lim = {});

// Q^(n) via saturation of Q^n at a witness s outside Q. Exact when the caller
// asserts that s lies in every embedded prime of Q^n; a lower bound otherwise.
SymbolicPowerResult symbolic_power_prime(const Ideal& Q, int64_t n, const Polynomial& witness,
                                         bool assert_exact, const Limits& lim = {});

struct MainTheoremReport {
    bool holds = false;
    int64_t m = 0;
    int64_t height_bound = 0; // h with every component height <= h
    int64_t symbolic_level = 0;
    double ms = 0;
    std::string detail;
};

// Checks I^(m*h) inside I^m with h the certified bound on component heights
// (the size of the largest minimal vertex cover).
MainTheoremReport check_main_theorem_squarefree(const MonomialIdeal& I, int64_t m,
                                                const Limits& lim = {});

// prime-path variant; h is caller-declared
MainTheoremReport check_main_theorem_prime(const Ideal& Q, int64_t h, int64_t m,
                                           const Polynomial& witness, bool assert_exact,
                                           const Limits& lim = {});

} // namespace symalg
