#include "symalg/snc.hpp"

#include "symalg/parser.hpp"

#include <sstream>

namespace symalg {

MixedModel MixedModel::make(const std::vector<std::string>& x_vars, uint32_t p) {
    std::vector<std::string> vars;
    vars.push_back("p");
    for (const auto& v : x_vars) {
        if (v == "p") throw DomainError("x-variable may not be named p");
        vars.push_back(v);
    }
    return MixedModel{make_rational_ring(vars, MonomialOrder::grevlex()), p};
}

FormalExponent::FormalExponent(Rat value) : t(std::move(value)) {
    t.canonicalize();
    if (t < 0) throw DomainError("formal exponent must be non-negative");
    if (Int(t.get_den()) > Int(1000000000))
        throw DomainError("formal exponent denominator exceeds 10^9");
}

MonomialIdeal snc_test_ideal(const MixedModel& model, const SncMonomial& f,
                             const FormalExponent& t) {
    if (f.exps.size() != model.dim()) throw DomainError("monomial does not fit the model");
    Exponents e(f.exps.size());
    for (size_t i = 0; i < f.exps.size(); ++i)
        e[i] = rat_floor(Rat(static_cast<long>(f.exps[i])) * t.t).get_si();
    return MonomialIdeal::principal(model.ring, e);
}

Int ceil_pe_exponent(const FormalExponent& t, int e, uint32_t p_value) {
    if (e < 1 || e > 40) throw ResourceLimitError("p-power exponent e out of range [1,40]");
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p_value, static_cast<unsigned long>(e));
    return rat_ceil(t.t * Rat(pe));
}

std::pair<MixedModel, SncMonomial> parse_snc_monomial(const std::string& text, uint32_t p) {
    // collect variables in order of appearance, p forced first
    std::vector<std::string> order;
    {
        std::string name;
        auto flush = [&]() {
            if (!name.empty()) {
                bool known = name == "p";
                for (const auto& v : order) known = known || v == name;
                if (!known) order.push_back(name);
                name.clear();
            }
        };
        for (char c : text) {
            if (std::isalnum(static_cast<unsigned char>(c))) {
                if (name.empty() && std::isdigit(static_cast<unsigned char>(c))) continue;
                name += c;
            } else {
                flush();
            }
        }
        flush();
    }
    MixedModel model = MixedModel::make(order, p);
    Polynomial f = parse_polynomial(text, model.ring);
    return {model, snc_from_polynomial(model, f)};
}

SncMonomial snc_from_polynomial(const MixedModel& model, const Polynomial& f) {
    require_same_ring(model.ring, f.ring());
    if (!f.is_monomial() || f.terms().begin()->second != 1)
        throw DomainError("expected a monomial with coefficient 1");
    return SncMonomial{f.terms().begin()->first};
}

std::string snc_str(const MixedModel& model, const SncMonomial& f) {
    return Polynomial::monomial(model.ring, f.exps).str();
}

std::optional<SncProperty> snc_property_from_name(const std::string& name) {
    if (name == "A-containment") return SncProperty::containment_monotone;
    if (name == "A-exponent-monotone") return SncProperty::exponent_monotone;
    if (name == "B-unambiguity") return SncProperty::power_unambiguity;
    if (name == "C-not-too-small") return SncProperty::contains_ideal;
    if (name == "E-subadditivity") return SncProperty::subadditivity;
    return std::nullopt;
}

std::string snc_property_name(SncProperty p) {
    switch (p) {
    case SncProperty::containment_monotone: return "A-containment";
    case SncProperty::exponent_monotone: return "A-exponent-monotone";
    case SncProperty::power_unambiguity: return "B-unambiguity";
    case SncProperty::contains_ideal: return "C-not-too-small";
    case SncProperty::subadditivity: return "E-subadditivity";
    }
    return "?";
}

PropertyReport verify_property(const MixedModel& model, SncProperty prop,
                               const SncPropertyInputs& in) {
    PropertyReport rep;
    auto tau = [&](const SncMonomial& f, const Rat& t) {
        return snc_test_ideal(model, f, FormalExponent(t));
    };
    switch (prop) {
    case SncProperty::containment_monotone: {
        if (!in.g) throw DomainError("A-containment needs a second monomial g");
        if (!in.f.divides(*in.g))
            throw DomainError("A-containment requires f | g");
        MonomialIdeal lhs = tau(*in.g, in.t), rhs = tau(in.f, in.t);
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.pass = rhs.contains(lhs);
        break;
    }
    case SncProperty::exponent_monotone: {
        if (!in.s_or_t2) throw DomainError("A-exponent-monotone needs a second exponent");
        Rat tlo = in.t, thi = *in.s_or_t2;
        if (thi < tlo) std::swap(tlo, thi);
        MonomialIdeal lhs = tau(in.f, thi), rhs = tau(in.f, tlo);
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.pass = rhs.contains(lhs);
        break;
    }
    case SncProperty::power_unambiguity: {
        if (!in.n) throw DomainError("B-unambiguity needs an integer n");
        MonomialIdeal lhs = tau(in.f.pow(*in.n), in.t);
        MonomialIdeal rhs = tau(in.f, in.t * Rat(static_cast<long>(*in.n)));
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.pass = lhs.equals(rhs);
        break;
    }
    case SncProperty::contains_ideal: {
        MonomialIdeal lhs = MonomialIdeal::principal(model.ring, in.f.exps);
        MonomialIdeal rhs = tau(in.f, Rat(1));
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.pass = rhs.contains(lhs);
        break;
    }
    case SncProperty::subadditivity: {
        if (!in.s_or_t2) throw DomainError("E-subadditivity needs a second exponent");
        MonomialIdeal lhs = tau(in.f, in.t + *in.s_or_t2);
        MonomialIdeal rhs = monomial_product(tau(in.f, in.t), tau(in.f, *in.s_or_t2));
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.pass = rhs.contains(lhs);
        break;
    }
    }
    if (!rep.pass)
        rep.witness = "lhs=" + rep.lhs + " rhs=" + rep.rhs + " f=" + snc_str(model, in.f) +
                      " t=" + rat_str(in.t);
    return rep;
}

Rat snc_jump_epsilon_bound(const SncMonomial& f, const Rat& t) {
    int64_t max_a = 0;
    Rat min_dist;
    bool any = false;
    for (int64_t a : f.exps) {
        max_a = std::max(max_a, a);
        if (a <= 0) continue;
        Rat at = Rat(static_cast<long>(a)) * t;
        // distance from a*t to the next strictly larger integer
        Rat dist = Rat(rat_floor(at) + 1) - at;
        if (!any || dist < min_dist) min_dist = dist;
        any = true;
    }
    if (!any) return Rat(1); // unit monomial: tau is (1) for every t
    return min_dist / Rat(static_cast<long>(max_a));
}

MonomialIdeal drop_p(const MixedModel& model, const SncMonomial& f) {
    std::vector<std::string> xs(model.ring->vars().begin() + 1, model.ring->vars().end());
    if (xs.empty()) xs.push_back("x"); // degenerate 1-dim model
    Ring xring = make_rational_ring(xs, MonomialOrder::grevlex());
    Exponents e;
    if (model.ring->nvars() == 1) {
        e.assign(1, 0);
    } else {
        e.assign(f.exps.begin() + 1, f.exps.end());
    }
    return MonomialIdeal::principal(xring, e);
}

bool snc_vs_multiplier(const MixedModel& model, const SncMonomial& f, const Rat& t,
                       const Limits& lim) {
    MonomialIdeal tau = snc_test_ideal(model, f, FormalExponent(t));
    // drop p from tau(f^t): it is principal
    Exponents taue = tau.gens().at(0);
    SncMonomial tau_mon{taue};
    MonomialIdeal tau_dropped = drop_p(model, tau_mon);
    MonomialIdeal f_dropped = drop_p(model, f);
    MonomialIdeal J = multiplier_ideal_monomial(f_dropped, t, lim);
    return J.contains(tau_dropped);
}

} // namespace symalg
