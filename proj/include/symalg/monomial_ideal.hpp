#pragma once

#include <vector>

#include "symalg/ideal.hpp"

namespace symalg {

// Monomial ideal held as the minimal generating set of exponent vectors
// (an antichain under componentwise <=). Empty generator set = zero ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default; // placeholder; meaningful instances carry a ring
    MonomialIdeal(Ring ring, std::vector<Exponents> gens);

    static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring, {}); }
    static MonomialIdeal unit(const Ring& ring) {
        return MonomialIdeal(ring, {Exponents(ring->nvars(), 0)});
    }
    static MonomialIdeal principal(const Ring& ring, const Exponents& e) {
        return MonomialIdeal(ring, {e});
    }
    // extracts the exponent set; requires every generator to be a term
    static MonomialIdeal from_ideal(const Ideal& I);

    const Ring& ring() const { return ring_; }
    const std::vector<Exponents>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_squarefree() const;
    size_t nvars() const { return ring_->nvars(); }

    bool contains(const Exponents& e) const;
    bool contains(const MonomialIdeal& other) const;
    bool equals(const MonomialIdeal& other) const;

    Ideal to_ideal() const;
    std::string str() const;

private:
    Ring ring_;
    std::vector<Exponents> gens_;
};

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_power(const MonomialIdeal& a, int64_t n);
MonomialIdeal monomial_intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// conv(generator exponents) + nonnegative orthant, as an exact halfspace list.
struct NewtonPolyhedron {
    struct Halfspace {
        std::vector<Rat> normal; // componentwise >= 0
        Rat offset;              // normal . x >= offset
        bool coordinate;         // x_j >= 0
    };
    std::vector<Exponents> generators;
    std::vector<Halfspace> halfspaces;

    bool contains(const std::vector<Rat>& point) const;
    bool contains(const Exponents& point) const;
    // point lies in the interior of t * polyhedron: strict on non-coordinate
    // halfspaces, >= 0 on coordinate ones
    bool interior_of_scaled(const std::vector<Rat>& point, const Rat& t) const;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& M, const Limits& lim = {});

// minimal lattice points of Newt(M)
MonomialIdeal integral_closure(const MonomialIdeal& M, const Limits& lim = {});

// minimal primes of a squarefree monomial ideal = minimal vertex covers of the
// supports; each cover is a sorted list of variable indices
std::vector<std::vector<int>> minimal_primes_squarefree(const MonomialIdeal& M);
int64_t height_squarefree(const MonomialIdeal& M);     // min cover size
int64_t big_height_squarefree(const MonomialIdeal& M); // max minimal-cover size

// Howald's closed form: generated by x^v with v + (1,..,1) in int(t Newt(M)).
MonomialIdeal multiplier_ideal_monomial(const MonomialIdeal& M, const Rat& t,
                                        const Limits& lim = {});

} // namespace symalg
