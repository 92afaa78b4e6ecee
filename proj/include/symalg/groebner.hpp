#pragma once

#include <string>
#include <vector>

#include "symalg/polynomial.hpp"

namespace symalg {

struct Reduction {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // f = sum quotients[i] * G[i] + remainder
};

// Multivariate division: remainder has no term divisible by any LT(G[i]).
Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord,
                 const Limits& lim = {});

class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(Ring ring, std::vector<Polynomial> gens, MonomialOrder order, bool reduced)
        : ring_(std::move(ring)), gens_(std::move(gens)), order_(order), reduced_(reduced) {}

    const std::vector<Polynomial>& gens() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool reduced() const { return reduced_; }
    bool empty() const { return gens_.empty(); } // zero ideal
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    const Ring& ring() const { return ring_; }

    std::string str() const;

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    bool reduced_ = false;
};

// Buchberger with the coprime-LT and chain pair criteria, followed by full
// interreduction. Output is the reduced basis, monic, sorted by leading term
// ascending, so it is canonical for the ideal and order.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const Limits& lim = {});

bool member(const Polynomial& f, const GroebnerBasis& gb, const Limits& lim = {});

// Generators of I intersected with the subring in the last keep_last
// variables. Requires gb computed under block(nvars - keep_last).
std::vector<Polynomial> eliminate(const GroebnerBasis& gb, size_t keep_last);

// Defining ideal of the image of source_vars |-> images: the kernel of the
// ring map k[source_vars] -> target. Returned in a fresh ring on source_vars.
GroebnerBasis kernel_of_map(const std::vector<std::string>& source_vars, const Ring& target,
                            const std::vector<Polynomial>& images,
                            MonomialOrder source_order = MonomialOrder::grevlex(),
                            const Limits& lim = {});

} // namespace symalg
