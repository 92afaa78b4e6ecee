#include "symalg/ring.hpp"

#include <set>

namespace symalg {

namespace {

bool is_prime_u32(uint32_t q) {
    if (q < 2) return false;
    if (q % 2 == 0) return q == 2;
    for (uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

} // namespace

PolyRing::PolyRing(std::vector<std::string> vars, CoeffDomain domain, uint32_t modulus,
                   MonomialOrder order)
    : vars_(std::move(vars)), domain_(domain), modulus_(modulus), order_(order) {
    if (vars_.empty()) throw DomainError("ring needs at least one variable");
    if (vars_.size() > kMaxVars)
        throw ResourceLimitError("too many variables (" + std::to_string(vars_.size()) + ")");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name: " + v);
    }
    if (domain_ == CoeffDomain::prime_field && !is_prime_u32(modulus_))
        throw DomainError("prime-field modulus " + std::to_string(modulus_) + " is not prime");
    if (order_.kind == MonomialOrder::Kind::block &&
        (order_.block_size < 1 || static_cast<size_t>(order_.block_size) >= vars_.size()))
        throw DomainError("block order size out of range");
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Rat PolyRing::normalize(const Rat& c) const {
    if (domain_ == CoeffDomain::rationals) {
        Rat r = c;
        r.canonicalize();
        return r;
    }
    // reduce num/den mod q; denominator inverted
    Int q(modulus_);
    Int num = c.get_num() % q;
    if (num < 0) num += q;
    Int den = c.get_den() % q;
    if (den < 0) den += q;
    if (den == 0) throw DomainError("denominator divisible by field characteristic");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t()) == 0)
        throw DomainError("non-invertible denominator in prime field");
    return Rat((num * inv) % q);
}

Rat PolyRing::div(const Rat& a, const Rat& b) const {
    if (is_zero(b)) throw DomainError("division by zero coefficient");
    if (domain_ == CoeffDomain::rationals) {
        Rat r = a / b;
        r.canonicalize();
        return r;
    }
    Rat nb = normalize(b);
    Int q(modulus_);
    Int inv;
    mpz_invert(inv.get_mpz_t(), nb.get_num().get_mpz_t(), q.get_mpz_t());
    return normalize(normalize(a) * Rat(inv));
}

Ring make_rational_ring(std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<PolyRing>(std::move(vars), CoeffDomain::rationals, 0, order);
}

Ring make_prime_field_ring(std::vector<std::string> vars, uint32_t q, MonomialOrder order) {
    return std::make_shared<PolyRing>(std::move(vars), CoeffDomain::prime_field, q, order);
}

Ring with_order(const Ring& r, MonomialOrder order) {
    return std::make_shared<PolyRing>(r->vars(), r->domain(), r->modulus(), order);
}

} // namespace symalg
