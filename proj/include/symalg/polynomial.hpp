#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symalg/monomial.hpp"
#include "symalg/ring.hpp"

namespace symalg {

// Sparse exact multivariate polynomial. Terms are stored in a map keyed by
// exponent vector (structural order); no zero coefficients are ever kept.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rat>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, const Exponents& e, const Rat& c) : ring_(std::move(ring)) {
        add_term(e, c);
    }

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const Rat& c) {
        return Polynomial(ring, Exponents(ring->nvars(), 0), c);
    }
    static Polynomial variable(const Ring& ring, size_t i, int64_t power = 1) {
        Exponents e(ring->nvars(), 0);
        e[i] = power;
        return Polynomial(ring, e, 1);
    }
    static Polynomial monomial(const Ring& ring, const Exponents& e) {
        return Polynomial(ring, e, 1);
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;

    int64_t degree() const; // max total degree, -1 for 0

    void add_term(const Exponents& e, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial shifted(const Exponents& e, const Rat& c) const; // c * x^e * this
    Polynomial pow(int64_t n) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Leading term under the given order; errors on the zero polynomial.
    std::pair<Exponents, Rat> leading_term(const MonomialOrder& ord) const;

    // divide every exponent vector by x^e (requires divisibility)
    Polynomial exact_monomial_quotient(const Exponents& e) const;

    // partial derivative w.r.t. variable i
    Polynomial derivative(size_t i) const;

    // substitute variable i := value (value in the same ring)
    Polynomial substitute(size_t i, const Polynomial& value) const;

    // re-express in another ring; variables are matched by name, missing
    // variables must not occur with positive exponent
    Polynomial map_to(const Ring& target) const;

    // canonical text form, terms descending in the ring's default order
    std::string str() const;
    std::string str(const MonomialOrder& ord) const;

private:
    Ring ring_;
    TermMap terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p.scaled(c); }

} // namespace symalg
