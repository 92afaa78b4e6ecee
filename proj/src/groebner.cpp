#include "symalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace symalg {

Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord,
                 const Limits& lim) {
    for (const auto& g : G) require_same_ring(f.ring(), g.ring());
    const Ring& ring = f.ring();

    struct Divisor {
        Exponents lt;
        Rat lc;
        const Polynomial* poly;
    };
    std::vector<Divisor> divisors;
    divisors.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) {
            divisors.push_back({});
            divisors.back().poly = nullptr;
            continue;
        }
        auto [lt, lc] = g.leading_term(ord);
        divisors.push_back({std::move(lt), std::move(lc), &g});
    }

    Reduction out;
    out.remainder = Polynomial::zero(ring);
    out.quotients.assign(G.size(), Polynomial::zero(ring));

    Polynomial p = f;
    int64_t steps = 0;
    while (!p.is_zero()) {
        if (++steps % 256 == 0) lim.check_time();
        lim.check_terms(static_cast<int64_t>(p.term_count()));
        auto [lt, lc] = p.leading_term(ord);
        bool divided = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!divisors[i].poly) continue;
            if (!exp_divides(divisors[i].lt, lt)) continue;
            Exponents q = exp_div(lt, divisors[i].lt);
            Rat qc = ring->div(lc, divisors[i].lc);
            out.quotients[i].add_term(q, qc);
            p = p - divisors[i].poly->shifted(q, qc);
            divided = true;
            break;
        }
        if (!divided) {
            out.remainder.add_term(lt, lc);
            Polynomial single(ring, lt, lc);
            p = p - single;
        }
    }
    return out;
}

namespace {

Polynomial make_monic(const Polynomial& f, const MonomialOrder& ord) {
    auto [lt, lc] = f.leading_term(ord);
    return f.scaled(f.ring()->div(Rat(1), lc));
}

struct Pair {
    size_t i, j;
    Exponents lcm;
    int64_t deg;
};

// normal strategy: degree of lcm, then order on lcm, then indices
struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const Limits& lim) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_zero()) basis.push_back(make_monic(g, ord));
    }
    if (basis.empty()) return GroebnerBasis(ring, {}, ord, true);

    std::vector<Exponents> lts;
    for (const auto& g : basis) lts.push_back(g.leading_term(ord).first);

    std::set<Pair, PairLess> queue(PairLess{&ord});
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pair = [&](size_t i, size_t j) {
        Pair p{i, j, exp_lcm(lts[i], lts[j]), 0};
        p.deg = total_degree(p.lcm);
        queue.insert(std::move(p));
        pending.insert({i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) push_pair(i, j);

    int64_t processed = 0;
    while (!queue.empty()) {
        if (++processed > lim.max_pairs) throw ResourceLimitError("S-pair budget exceeded");
        lim.check_time();
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});

        // first criterion: coprime leading terms
        if (exp_coprime(lts[pr.i], lts[pr.j])) continue;
        // chain criterion
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!exp_divides(lts[k], pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        const Polynomial& gi = basis[pr.i];
        const Polynomial& gj = basis[pr.j];
        Polynomial spoly = gi.shifted(exp_div(pr.lcm, lts[pr.i]), 1) -
                           gj.shifted(exp_div(pr.lcm, lts[pr.j]), 1);
        Polynomial rem = reduce(spoly, basis, ord, lim).remainder;
        if (rem.is_zero()) continue;
        lim.check_degree(rem.degree());
        rem = make_monic(rem, ord);
        basis.push_back(rem);
        lts.push_back(rem.leading_term(ord).first);
        size_t j = basis.size() - 1;
        for (size_t i = 0; i < j; ++i) push_pair(i, j);
    }

    // minimalize: drop generators whose LT is divisible by another kept LT
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (exp_divides(lts[j], lts[i]) && !(lts[i] == lts[j] && j > i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // full tail reduction
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others, ord, lim).remainder;
        if (!r.is_zero()) reduced.push_back(make_monic(r, ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return GroebnerBasis(ring, std::move(reduced), ord, true);
}

bool member(const Polynomial& f, const GroebnerBasis& gb, const Limits& lim) {
    if (f.is_zero()) return true;
    if (gb.empty()) return false;
    return reduce(f, gb.gens(), gb.order(), lim).remainder.is_zero();
}

std::vector<Polynomial> eliminate(const GroebnerBasis& gb, size_t keep_last) {
    if (gb.empty()) return {};
    size_t d = gb.ring()->nvars();
    if (keep_last > d) throw DomainError("keep_last exceeds variable count");
    size_t drop = d - keep_last;
    if (drop > 0) {
        const MonomialOrder& o = gb.order();
        bool ok = (o.kind == MonomialOrder::Kind::block &&
                   static_cast<size_t>(o.block_size) >= drop) ||
                  (o.kind == MonomialOrder::Kind::lex);
        if (!ok)
            throw DomainError("elimination requires block(" + std::to_string(drop) +
                              ") or lex order");
    }
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens()) {
        bool free_of_front = true;
        for (const auto& [e, c] : g.terms()) {
            for (size_t i = 0; i < drop && free_of_front; ++i)
                if (e[i] > 0) free_of_front = false;
            if (!free_of_front) break;
        }
        if (free_of_front) out.push_back(g);
    }
    return out;
}

GroebnerBasis kernel_of_map(const std::vector<std::string>& source_vars, const Ring& target,
                            const std::vector<Polynomial>& images, MonomialOrder source_order,
                            const Limits& lim) {
    if (source_vars.size() != images.size())
        throw DomainError("one image required per source variable");
    for (const auto& f : images) require_same_ring(target, f.ring());
    for (const auto& v : source_vars)
        if (target->var_index(v) >= 0)
            throw DomainError("source variable " + v + " collides with target ring");

    std::vector<std::string> combined = target->vars();
    combined.insert(combined.end(), source_vars.begin(), source_vars.end());
    size_t m = target->nvars();
    Ring big = std::make_shared<PolyRing>(combined, target->domain(), target->modulus(),
                                          MonomialOrder::block(static_cast<int>(m)));

    std::vector<Polynomial> rel;
    for (size_t i = 0; i < source_vars.size(); ++i) {
        Polynomial si = Polynomial::variable(big, m + i);
        rel.push_back(si - images[i].map_to(big));
    }
    GroebnerBasis gb = buchberger(big, rel, big->order(), lim);
    std::vector<Polynomial> elim = eliminate(gb, source_vars.size());

    Ring src = std::make_shared<PolyRing>(source_vars, target->domain(), target->modulus(),
                                          source_order);
    std::vector<Polynomial> out;
    for (const auto& g : elim) out.push_back(g.map_to(src));
    if (source_order == MonomialOrder::grevlex())
        return GroebnerBasis(src, std::move(out), source_order, true);
    return buchberger(src, out, source_order, lim);
}

std::string GroebnerBasis::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str(order_);
    }
    os << "}";
    return os.str();
}

} // namespace symalg
