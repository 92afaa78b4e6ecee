#include "symalg/asymptotic.hpp"

#include <sstream>

namespace symalg {

std::string TaggedGenerator::provenance() const {
    if (fresh) return "fresh";
    std::ostringstream os;
    os << "product(" << s << "." << si << " x " << t << "." << tj << ")";
    return os.str();
}

GradedSequence::GradedSequence(Ring ring, Evaluator eval, std::string name)
    : ring_(std::move(ring)), eval_(std::move(eval)), name_(std::move(name)),
      state_(std::make_shared<State>()) {}

GradedSequence GradedSequence::powers(const Ideal& I) {
    Ring r = I.ring();
    return GradedSequence(r, [I](int64_t n) { return ideal_power(I, n); },
                          "powers of " + I.str());
}

GradedSequence GradedSequence::powers(const MonomialIdeal& I) {
    Ring r = I.ring();
    return GradedSequence(
        r, [I](int64_t n) { return monomial_power(I, n).to_ideal(); },
        "powers of " + I.str());
}

GradedSequence GradedSequence::symbolic_powers_squarefree(const MonomialIdeal& I) {
    Ring r = I.ring();
    return GradedSequence(
        r,
        [I](int64_t n) { return symbolic_power_squarefree_monomial(I, n).to_ideal(); },
        "symbolic powers of " + I.str());
}

Ideal GradedSequence::level_locked(int64_t n, const Limits& lim) const {
    auto it = state_->levels.find(n);
    if (it != state_->levels.end()) return it->second;
    lim.check_time();
    Ideal value = eval_(n);
    state_->levels.emplace(n, value);
    return value;
}

Ideal GradedSequence::level(int64_t n, const Limits& lim) const {
    if (n < 1) throw DomainError("graded sequence level must be >= 1");
    std::lock_guard<std::mutex> lock(state_->mu);
    return level_locked(n, lim);
}

MonomialIdeal GradedSequence::level_monomial(int64_t n, const Limits& lim) const {
    return MonomialIdeal::from_ideal(level(n, lim));
}

void GradedSequence::check_axiom(int64_t up_to, const Limits& lim) const {
    for (int64_t s = 1; s <= up_to; ++s) {
        for (int64_t t = s; s + t <= up_to; ++t) {
            Ideal prod = ideal_product(level(s, lim), level(t, lim));
            if (!level(s + t, lim).contains(prod, lim))
                throw DomainError("graded sequence axiom violated at levels " +
                                  std::to_string(s) + "+" + std::to_string(t));
        }
    }
}

const std::vector<TaggedGenerator>& GradedSequence::generating_set(int64_t m, const Limits& lim) {
    if (m < 1) throw DomainError("generating sets start at level 1");
    if (m > 12) throw ResourceLimitError("generating sets limited to level 12");
    check_axiom(m, lim);
    std::lock_guard<std::mutex> lock(state_->mu);
    for (int64_t lvl = 1; lvl <= m; ++lvl) {
        if (state_->gen_sets.count(lvl)) continue;
        std::vector<TaggedGenerator> set;
        // products of chosen generators from lower levels, all ordered splits
        for (int64_t s = 1; s < lvl; ++s) {
            int64_t t = lvl - s;
            const auto& gs = state_->gen_sets.at(s);
            const auto& gt = state_->gen_sets.at(t);
            for (size_t i = 0; i < gs.size(); ++i)
                for (size_t j = 0; j < gt.size(); ++j) {
                    TaggedGenerator tg;
                    tg.value = gs[i].value * gt[j].value;
                    tg.fresh = false;
                    tg.s = s;
                    tg.si = i;
                    tg.t = t;
                    tg.tj = j;
                    set.push_back(std::move(tg));
                }
        }
        // fresh declared generators of the level
        Ideal level_ideal = level_locked(lvl, lim);
        for (const auto& g : level_ideal.gens()) {
            TaggedGenerator tg;
            tg.value = g;
            tg.fresh = true;
            set.push_back(std::move(tg));
        }
        if (static_cast<int64_t>(set.size()) > lim.max_terms)
            throw ResourceLimitError("generating set at level " + std::to_string(lvl) +
                                     " exceeds the size budget");
        state_->gen_sets.emplace(lvl, std::move(set));
    }
    return state_->gen_sets.at(m);
}

namespace {

MonomialIdeal apply_oracle(const MonomialIdeal& level_ideal, int64_t l, AsymptoticOracle oracle,
                           const Limits& lim) {
    Rat t(1, static_cast<unsigned long>(l));
    t.canonicalize();
    switch (oracle) {
    case AsymptoticOracle::multiplier:
        return multiplier_ideal_monomial(level_ideal, t, lim);
    case AsymptoticOracle::snc_test: {
        if (level_ideal.gens().size() != 1)
            throw DomainError("snc-test oracle needs principal monomial levels");
        const Exponents& a = level_ideal.gens()[0];
        Exponents e(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            e[i] = rat_floor(Rat(static_cast<long>(a[i])) * t).get_si();
        return MonomialIdeal::principal(level_ideal.ring(), e);
    }
    }
    throw DomainError("unknown oracle");
}

} // namespace

AsymptoticIdeal asymptotic_ideal(const GradedSequence& seq, int64_t n, AsymptoticOracle oracle,
                                 const Limits& lim) {
    if (n < 1) throw DomainError("level must be >= 1");
    MonomialIdeal prev = apply_oracle(seq.level_monomial(n, lim), 1, oracle, lim);
    for (int64_t l = 2; l <= 64; l *= 2) {
        lim.check_time();
        MonomialIdeal cur = apply_oracle(seq.level_monomial(l * n, lim), l, oracle, lim);
        if (cur.equals(prev)) return {n, prev, l / 2};
        prev = cur;
    }
    throw ResourceLimitError("asymptotic ideal did not stabilize by l = 64");
}

SubadditivityReport verify_asymptotic_subadditivity(const GradedSequence& seq, int64_t n,
                                                    int64_t m, AsymptoticOracle oracle,
                                                    const Limits& lim) {
    if (m < 1) throw DomainError("m must be >= 1");
    SubadditivityReport rep;
    rep.lhs = asymptotic_ideal(seq, m * n, oracle, lim);
    rep.rhs = asymptotic_ideal(seq, n, oracle, lim);
    MonomialIdeal bound = monomial_power(rep.rhs.stabilized, m);
    rep.pass = bound.contains(rep.lhs.stabilized);
    if (!rep.pass)
        rep.witness = "stabilized(" + std::to_string(m * n) + ") = " + rep.lhs.stabilized.str() +
                      " not inside " + bound.str();
    return rep;
}

PipelineReport main_theorem_pipeline(const MonomialIdeal& I, int64_t m, const Limits& lim) {
    if (m < 1) throw DomainError("m must be >= 1");
    if (!I.is_squarefree()) throw DomainError("pipeline needs a squarefree monomial ideal");
    PipelineReport rep;
    rep.m = m;
    rep.height_bound = big_height_squarefree(I);
    int64_t h = rep.height_bound;

    GradedSequence seq = GradedSequence::symbolic_powers_squarefree(I);
    AsymptoticIdeal a_hm = asymptotic_ideal(seq, h * m, AsymptoticOracle::multiplier, lim);
    AsymptoticIdeal a_h = asymptotic_ideal(seq, h, AsymptoticOracle::multiplier, lim);
    MonomialIdeal sym_hm = seq.level_monomial(h * m, lim);

    {
        PipelineLink link;
        link.name = "symbolic-level-inside-asymptotic";
        link.oracle_level = true;
        link.pass = a_hm.stabilized.contains(sym_hm);
        link.detail = "I^(" + std::to_string(h * m) + ") vs stabilized l*=" +
                      std::to_string(a_hm.stabilizing_multiple);
        rep.links.push_back(link);
    }
    {
        PipelineLink link;
        link.name = "asymptotic-subadditivity";
        link.oracle_level = true;
        MonomialIdeal bound = monomial_power(a_h.stabilized, m);
        link.pass = bound.contains(a_hm.stabilized);
        link.detail = "stabilized(" + std::to_string(h * m) + ") vs stabilized(" +
                      std::to_string(h) + ")^" + std::to_string(m);
        rep.links.push_back(link);
    }
    {
        PipelineLink link;
        link.name = "asymptotic-inside-ideal";
        link.oracle_level = true;
        link.pass = I.contains(a_h.stabilized);
        link.detail = "stabilized(" + std::to_string(h) + ") vs I";
        rep.links.push_back(link);
    }
    {
        PipelineLink link;
        link.name = "endpoint-symbolic-in-ordinary";
        link.oracle_level = false;
        MonomialIdeal ordinary = monomial_power(I, m);
        link.pass = ordinary.contains(sym_hm);
        link.detail = "I^(" + std::to_string(h * m) + ") vs I^" + std::to_string(m);
        rep.links.push_back(link);
    }

    rep.all_pass = true;
    for (const auto& l : rep.links) rep.all_pass = rep.all_pass && l.pass;
    return rep;
}

} // namespace symalg
