#pragma once

#include <string>
#include <vector>

#include "symalg/monomial_ideal.hpp"

namespace symalg {

// Presentation of the Rees algebra R[I t]: the kernel of R[T_1..T_m] -> R[t],
// T_j -> z_j t, computed by elimination. Homogeneous in the T-variables.
struct ReesPresentation {
    Ring base_ring;
    std::vector<Polynomial> ideal_gens; // z_1..z_m in the base ring
    Ring rees_ring;                     // base variables followed by T1..Tm
    GroebnerBasis presentation;
};

ReesPresentation rees_presentation(const Ideal& I, const Limits& lim = {});

// Affine chart U_i = Spec R[z_1/z_i, .., z_m/z_i]: presentation dehomogenized
// at T_i = 1. The chart ring keeps the remaining T_j as the fraction names.
struct BlowupChart {
    int index = 0; // 1-based
    Ring chart_ring;
    std::vector<Polynomial> relations;
};

BlowupChart chart(const ReesPresentation& rees, int i, const Limits& lim = {});

// Monic integral equation f^n + a_1 f^{n-1} + ... + a_n = 0 over J for a
// monomial f with exponent in Newt(J): here a_n = -f^n with f^n in J^n and
// all other a_i zero. Per chart, f/z_i^k then satisfies the dehomogenized
// monic equation.
struct IntegralityReport {
    int64_t degree = 0;             // n
    std::vector<size_t> combo;      // generator indices whose product divides f^n
    Exponents residual;             // f^n = (product of combo) * x^residual
    std::vector<std::string> chart_equations;
};

IntegralityReport integral_extension_chart(const MonomialIdeal& J, const Exponents& f,
                                           const Limits& lim = {});

// Order of vanishing along the exceptional divisor of the Jacobian of the
// first chart substitution x_1 = u, x_j = u v_j of the blowup of the maximal
// ideal in d variables. Equals d-1.
int64_t relative_canonical_maxideal(int d);

// Sections of O(kE - hE) on the maximal-ideal blowup pulled back to the ring:
// the ideal of elements vanishing to order >= h - k at the origin.
MonomialIdeal twisted_sections_maxideal(const Ring& ring, int64_t k, int64_t h);

} // namespace symalg
