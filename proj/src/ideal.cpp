#include "symalg/ideal.hpp"

#include <mutex>
#include <sstream>

namespace symalg {

struct Ideal::GbCache {
    std::mutex mu;
    std::optional<GroebnerBasis> gb;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<GbCache>()) {
    for (auto& g : gens) {
        require_same_ring(ring_, g.ring());
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::gb(const Limits& lim) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = buchberger(ring_, gens_, ring_->order(), lim);
    return *cache_->gb;
}

bool Ideal::contains(const Polynomial& f, const Limits& lim) const {
    require_same_ring(ring_, f.ring());
    if (f.is_zero()) return true;
    // monomial fast path: single-term polynomial vs. monomial generators
    if (is_monomial() && f.is_monomial()) {
        const Exponents& e = f.terms().begin()->first;
        for (const auto& g : gens_)
            if (exp_divides(g.terms().begin()->first, e)) return true;
        return false;
    }
    return member(f, gb(lim), lim);
}

bool Ideal::contains(const Ideal& other, const Limits& lim) const {
    require_same_ring(ring_, other.ring_);
    for (const auto& g : other.gens_)
        if (!contains(g, lim)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other, const Limits& lim) const {
    return contains(other, lim) && other.contains(*this, lim);
}

bool Ideal::is_unit_ideal(const Limits& lim) const {
    return contains(Polynomial::constant(ring_, 1), lim);
}

bool Ideal::is_monomial() const {
    for (const auto& g : gens_)
        if (!g.is_monomial()) return false;
    return true;
}

std::string Ideal::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << ")";
    return os.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

// I^n generated by all degree-n monomials in the generators
Ideal ideal_power(const Ideal& a, int64_t n) {
    if (n < 0) throw DomainError("negative ideal power");
    if (n == 0) return Ideal::unit(a.ring());
    if (a.is_zero()) return a;
    std::vector<Polynomial> out;
    std::vector<size_t> combo;
    const auto& gens = a.gens();
    // multisets of size n over the generator list
    auto rec = [&](auto&& self, size_t start, int64_t remaining, const Polynomial& acc) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (size_t i = start; i < gens.size(); ++i)
            self(self, i, remaining - 1, acc * gens[i]);
    };
    rec(rec, 0, n, Polynomial::constant(a.ring(), 1));
    return Ideal(a.ring(), std::move(out));
}

namespace {

// lcm-based intersection for monomial ideals
Ideal intersect_monomial(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) {
            Exponents l = exp_lcm(f.terms().begin()->first, g.terms().begin()->first);
            gens.push_back(Polynomial::monomial(a.ring(), l));
        }
    return Ideal(a.ring(), std::move(gens));
}

} // namespace

Ideal intersect(const Ideal& a, const Ideal& b, const Limits& lim) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
    if (a.is_monomial() && b.is_monomial()) return intersect_monomial(a, b);

    // t-trick: eliminate t from t*I + (1-t)*J
    const Ring& r = a.ring();
    std::vector<std::string> vars = r->vars();
    vars.insert(vars.begin(), "@t");
    Ring ext = std::make_shared<PolyRing>(vars, r->domain(), r->modulus(),
                                          MonomialOrder::block(1));
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * f.map_to(ext));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.map_to(ext));
    GroebnerBasis gb = buchberger(ext, gens, ext->order(), lim);
    std::vector<Polynomial> elim = eliminate(gb, r->nvars());
    std::vector<Polynomial> out;
    for (const auto& g : elim) out.push_back(g.map_to(r));
    return Ideal(r, std::move(out));
}

Ideal colon(const Ideal& a, const Polynomial& f, const Limits& lim) {
    require_same_ring(a.ring(), f.ring());
    if (f.is_zero()) throw DomainError("colon by zero");
    if (a.is_zero()) return a;
    // monomial fast path
    if (a.is_monomial() && f.is_monomial()) {
        const Exponents& e = f.terms().begin()->first;
        std::vector<Polynomial> gens;
        for (const auto& g : a.gens()) {
            const Exponents& ge = g.terms().begin()->first;
            Exponents q(ge.size());
            for (size_t i = 0; i < ge.size(); ++i) q[i] = std::max<int64_t>(ge[i] - e[i], 0);
            gens.push_back(Polynomial::monomial(a.ring(), q));
        }
        return Ideal(a.ring(), std::move(gens));
    }
    // (I : f) = (1/f) * (I meet (f))
    Ideal principal(a.ring(), {f});
    Ideal meet = intersect(a, principal, lim);
    std::vector<Polynomial> gens;
    for (const auto& g : meet.gens()) {
        Reduction red = reduce(g, {f}, a.ring()->order(), lim);
        if (!red.remainder.is_zero())
            throw Error("internal error: intersection with principal ideal not divisible");
        gens.push_back(red.quotients[0]);
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal saturate(const Ideal& a, const Polynomial& f, const Limits& lim) {
    // iterate colon until stable (ACC)
    Ideal current = a;
    while (true) {
        lim.check_time();
        Ideal next = colon(current, f, lim);
        if (next.contains(current, lim) && current.contains(next, lim)) return current;
        current = next;
    }
}

bool radical_membership(const Polynomial& f, const Ideal& I, const Limits& lim) {
    require_same_ring(f.ring(), I.ring());
    if (f.is_zero()) throw DomainError("radical membership of zero");
    // Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - y*f)
    const Ring& r = I.ring();
    std::vector<std::string> vars = r->vars();
    vars.push_back("@y");
    Ring ext = std::make_shared<PolyRing>(vars, r->domain(), r->modulus(),
                                          MonomialOrder::grevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.map_to(ext));
    Polynomial y = Polynomial::variable(ext, ext->nvars() - 1);
    gens.push_back(Polynomial::constant(ext, 1) - y * f.map_to(ext));
    GroebnerBasis gb = buchberger(ext, gens, ext->order(), lim);
    return gb.is_unit();
}

} // namespace symalg
