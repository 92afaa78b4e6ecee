#include "symalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace symalg {

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != ring_->nvars()) throw DomainError("exponent vector length mismatch");
    for (int64_t x : e)
        if (x < 0) throw DomainError("negative exponent");
    Rat nc = ring_->normalize(c);
    if (nc == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, nc);
    } else {
        it->second = ring_->add(it->second, nc);
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return total_degree(e) == 0 && c == 1;
}

int64_t Polynomial::degree() const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, ring_->neg(c));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_->neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    if (static_cast<int64_t>(terms_.size()) * static_cast<int64_t>(o.terms_.size()) > 200000)
        throw ResourceLimitError("product term budget exceeded");
    Polynomial r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_mul(e1, e2), ring_->mul(c1, c2));
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(ring_);
    for (const auto& [e, k] : terms_) r.add_term(e, ring_->mul(k, c));
    return r;
}

Polynomial Polynomial::shifted(const Exponents& e, const Rat& c) const {
    Polynomial r(ring_);
    for (const auto& [e1, c1] : terms_) r.add_term(exp_mul(e1, e), ring_->mul(c1, c));
    return r;
}

Polynomial Polynomial::pow(int64_t n) const {
    if (n < 0) throw DomainError("negative power");
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    return terms_ == o.terms_;
}

std::pair<Exponents, Rat> Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::exact_monomial_quotient(const Exponents& e) const {
    Polynomial r(ring_);
    for (const auto& [e1, c] : terms_) {
        if (!exp_divides(e, e1)) throw DomainError("monomial quotient is not exact");
        r.terms_.emplace(exp_div(e1, e), c);
    }
    return r;
}

Polynomial Polynomial::derivative(size_t i) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents e2 = e;
        e2[i] -= 1;
        r.add_term(e2, ring_->mul(c, Rat(static_cast<long>(e[i]))));
    }
    return r;
}

Polynomial Polynomial::substitute(size_t i, const Polynomial& value) const {
    require_same_ring(ring_, value.ring_);
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        int64_t k = e2[i];
        e2[i] = 0;
        Polynomial part(ring_, e2, c);
        if (k > 0) part = part * value.pow(k);
        r = r + part;
    }
    return r;
}

Polynomial Polynomial::map_to(const Ring& target) const {
    std::vector<int> where(ring_->nvars(), -1);
    for (size_t i = 0; i < ring_->nvars(); ++i)
        where[i] = target->var_index(ring_->var_name(i));
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exponents e2(target->nvars(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw DomainError("variable " + ring_->var_name(i) + " absent from target ring");
            e2[static_cast<size_t>(where[i])] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

namespace {

void print_monomial(std::ostringstream& out, const PolyRing& ring, const Exponents& e,
                    bool lead_coeff_one) {
    bool first = lead_coeff_one;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << ring.var_name(i);
        if (e[i] > 1) out << "^" << e[i];
    }
}

} // namespace

std::string Polynomial::str(const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* a, const auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : sorted) {
        const auto& [e, c] = *t;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool constant_term = total_degree(e) == 0;
        if (abs != 1 || constant_term) {
            out << rat_str(abs);
            if (!constant_term) out << "*";
            print_monomial(out, *ring_, e, true);
        } else {
            print_monomial(out, *ring_, e, true);
        }
    }
    return out.str();
}

std::string Polynomial::str() const { return str(ring_->order()); }

} // namespace symalg
