#pragma once

#include <optional>
#include <string>

#include "symalg/monomial_ideal.hpp"

namespace symalg {

// Mixed-characteristic monomial model: polynomial ring whose first variable
// is the residue characteristic marker `p`, followed by x-variables. p_value
// only enters the ceil(t*p^e) exponent calculus.
struct MixedModel {
    Ring ring;
    uint32_t p_value;

    static MixedModel make(const std::vector<std::string>& x_vars, uint32_t p = 2);
    size_t dim() const { return ring->nvars(); } // d = 1 + number of x-variables
};

// f = p^{a_0} x_1^{a_1} ... x_{d-1}^{a_{d-1}}
struct SncMonomial {
    Exponents exps;

    SncMonomial pow(int64_t n) const { return {exp_pow(exps, n)}; }
    bool divides(const SncMonomial& g) const { return exp_divides(exps, g.exps); }
    bool is_unit() const { return total_degree(exps) == 0; }
};

// non-negative rational exponent with bounded denominator
struct FormalExponent {
    Rat t;
    explicit FormalExponent(Rat value);
};

// closed-form test ideal: the principal monomial ideal with exponents
// floor(a_i * t)
MonomialIdeal snc_test_ideal(const MixedModel& model, const SncMonomial& f,
                             const FormalExponent& t);

// exact ceil(t * p^e)
Int ceil_pe_exponent(const FormalExponent& t, int e, uint32_t p_value);

// SNC monomial from text like "p^2*x^3*y^5"; builds a model whose variables
// are p (always first) followed by the other variables in order of appearance
std::pair<MixedModel, SncMonomial> parse_snc_monomial(const std::string& text, uint32_t p = 2);
SncMonomial snc_from_polynomial(const MixedModel& model, const Polynomial& f);
std::string snc_str(const MixedModel& model, const SncMonomial& f);

enum class SncProperty {
    containment_monotone, // A: g in (f) => tau(g^t) in tau(f^t)
    exponent_monotone,    // A: t <= t' => tau(f^t') in tau(f^t)
    power_unambiguity,    // B: tau((f^n)^t) = tau(f^{nt})
    contains_ideal,       // C: (f) in tau(f^1)
    subadditivity         // E: tau(f^{s+t}) in tau(f^s) tau(f^t)
};

std::optional<SncProperty> snc_property_from_name(const std::string& name);
std::string snc_property_name(SncProperty p);

struct SncPropertyInputs {
    SncMonomial f;
    std::optional<SncMonomial> g; // containment_monotone
    Rat t = 0;
    std::optional<Rat> s_or_t2; // second exponent (subadditivity / monotonicity)
    std::optional<int64_t> n;   // power_unambiguity
};

struct PropertyReport {
    bool pass = false;
    std::string lhs, rhs;
    std::string witness; // filled on failure
};

PropertyReport verify_property(const MixedModel& model, SncProperty prop,
                               const SncPropertyInputs& in);

// largest eps-bound below which tau(f^t) = tau(f^{t+eps}); the right-limit
// stabilization of the definition
Rat snc_jump_epsilon_bound(const SncMonomial& f, const Rat& t);

// drop the p-coordinate: principal monomial ideal (x part of f) over the
// x-variable subring
MonomialIdeal drop_p(const MixedModel& model, const SncMonomial& f);

// tau(f^t) with p dropped is contained in the monomial multiplier ideal of
// the p-dropped f; the computable comparison with characteristic zero
bool snc_vs_multiplier(const MixedModel& model, const SncMonomial& f, const Rat& t,
                       const Limits& lim = {});

} // namespace symalg
