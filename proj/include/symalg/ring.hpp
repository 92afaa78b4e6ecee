#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symalg/error.hpp"
#include "symalg/numbers.hpp"
#include "symalg/order.hpp"

namespace symalg {

enum class CoeffDomain { rationals, prime_field };

// Polynomial ring: named variables, an exact coefficient domain (Q or F_q),
// and a default monomial order. Rings are immutable and shared by handle.
class PolyRing {
public:
    static constexpr size_t kMaxUserVars = 10;
    static constexpr size_t kMaxVars = 16; // internal elimination rings may extend

    PolyRing(std::vector<std::string> vars, CoeffDomain domain, uint32_t modulus,
             MonomialOrder order);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    CoeffDomain domain() const { return domain_; }
    uint32_t modulus() const { return modulus_; }
    const MonomialOrder& order() const { return order_; }

    int var_index(const std::string& name) const; // -1 if absent
    const std::string& var_name(size_t i) const { return vars_[i]; }

    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && domain_ == o.domain_ && modulus_ == o.modulus_;
    }

    // Coefficient arithmetic in this ring's domain. Values are carried as
    // exact rationals; in a prime field they are kept reduced in [0, q).
    Rat normalize(const Rat& c) const;
    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat div(const Rat& a, const Rat& b) const;
    bool is_zero(const Rat& a) const { return normalize(a) == 0; }

private:
    std::vector<std::string> vars_;
    CoeffDomain domain_;
    uint32_t modulus_;
    MonomialOrder order_;
};

using Ring = std::shared_ptr<const PolyRing>;

Ring make_rational_ring(std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex());
Ring make_prime_field_ring(std::vector<std::string> vars, uint32_t q,
                           MonomialOrder order = MonomialOrder::grevlex());

// Same variables and domain, different default order.
Ring with_order(const Ring& r, MonomialOrder order);

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        throw RingMismatchError("operands live in different rings");
}

} // namespace symalg
