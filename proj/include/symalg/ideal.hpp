#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "symalg/groebner.hpp"

namespace symalg {

enum class Primality { unknown, asserted_prime, certified_monomial_prime };

// Finitely generated ideal with a lazily computed, shared, write-once reduced
// Groebner basis (w.r.t. the ring's default order).
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> gens);

    static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
    static Ideal unit(const Ring& ring) {
        return Ideal(ring, {Polynomial::constant(ring, 1)});
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    const GroebnerBasis& gb(const Limits& lim = {}) const;

    bool contains(const Polynomial& f, const Limits& lim = {}) const;
    bool contains(const Ideal& other, const Limits& lim = {}) const;
    bool equals(const Ideal& other, const Limits& lim = {}) const;
    bool is_unit_ideal(const Limits& lim = {}) const;

    // all generators are terms
    bool is_monomial() const;

    std::optional<int64_t> declared_height;
    Primality primality = Primality::unknown;

    std::string str() const;

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    struct GbCache;
    std::shared_ptr<GbCache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int64_t n);
Ideal intersect(const Ideal& a, const Ideal& b, const Limits& lim = {});
Ideal colon(const Ideal& a, const Polynomial& f, const Limits& lim = {});
Ideal saturate(const Ideal& a, const Polynomial& f, const Limits& lim = {});
bool radical_membership(const Polynomial& f, const Ideal& I, const Limits& lim = {});

} // namespace symalg
