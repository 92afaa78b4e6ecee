#include "symalg/rees.hpp"

#include <sstream>

namespace symalg {

ReesPresentation rees_presentation(const Ideal& I, const Limits& lim) {
    if (I.is_zero()) throw DomainError("Rees algebra of the zero ideal");
    const Ring& R = I.ring();
    size_t m = I.gens().size();
    size_t nb = R->nvars();

    std::vector<std::string> rees_vars = R->vars();
    for (size_t j = 1; j <= m; ++j) {
        std::string tj = "T" + std::to_string(j);
        if (R->var_index(tj) >= 0)
            throw DomainError("base ring already uses variable " + tj);
        rees_vars.push_back(tj);
    }
    Ring rees_ring = std::make_shared<PolyRing>(rees_vars, R->domain(), R->modulus(),
                                                MonomialOrder::grevlex());

    // eliminate the auxiliary t from (T_j - z_j t)
    std::vector<std::string> big_vars;
    big_vars.push_back("@t");
    big_vars.insert(big_vars.end(), rees_vars.begin(), rees_vars.end());
    Ring big = std::make_shared<PolyRing>(big_vars, R->domain(), R->modulus(),
                                          MonomialOrder::block(1));
    Polynomial t = Polynomial::variable(big, 0);
    std::vector<Polynomial> rel;
    for (size_t j = 0; j < m; ++j) {
        Polynomial Tj = Polynomial::variable(big, 1 + nb + j);
        rel.push_back(Tj - I.gens()[j].map_to(big) * t);
    }
    GroebnerBasis gb = buchberger(big, rel, big->order(), lim);
    std::vector<Polynomial> elim = eliminate(gb, rees_vars.size());
    std::vector<Polynomial> pres;
    for (const auto& g : elim) pres.push_back(g.map_to(rees_ring));

    ReesPresentation out;
    out.base_ring = R;
    out.ideal_gens = I.gens();
    out.rees_ring = rees_ring;
    out.presentation = buchberger(rees_ring, pres, rees_ring->order(), lim);
    return out;
}

BlowupChart chart(const ReesPresentation& rees, int i, const Limits& lim) {
    size_t m = rees.ideal_gens.size();
    if (i < 1 || static_cast<size_t>(i) > m) throw DomainError("chart index out of range");
    size_t nb = rees.base_ring->nvars();

    std::vector<std::string> chart_vars = rees.base_ring->vars();
    for (size_t j = 1; j <= m; ++j)
        if (j != static_cast<size_t>(i)) chart_vars.push_back("T" + std::to_string(j));
    Ring chart_ring = std::make_shared<PolyRing>(chart_vars, rees.base_ring->domain(),
                                                 rees.base_ring->modulus(),
                                                 MonomialOrder::grevlex());

    size_t ti_index = nb + static_cast<size_t>(i) - 1;
    Polynomial one = Polynomial::constant(rees.rees_ring, 1);
    std::vector<Polynomial> rels;
    for (const auto& g : rees.presentation.gens()) {
        Polynomial dehom = g.substitute(ti_index, one);
        if (dehom.is_zero()) continue;
        rels.push_back(dehom.map_to(chart_ring));
    }
    GroebnerBasis gb = buchberger(chart_ring, rels, chart_ring->order(), lim);
    return BlowupChart{i, chart_ring, gb.gens()};
}

IntegralityReport integral_extension_chart(const MonomialIdeal& J, const Exponents& f,
                                           const Limits& lim) {
    if (J.is_zero()) throw DomainError("integral extension over the zero ideal");
    NewtonPolyhedron np = newton_polyhedron(J, lim);
    if (!np.contains(f))
        throw DomainError("monomial is not integral over the ideal "
                          "(exponent outside the Newton polyhedron)");

    const auto& gens = J.gens();
    size_t d = J.nvars();

    // smallest n with f^n in J^n, witnessed by an n-fold generator product
    IntegralityReport rep;
    for (int64_t n = 1; n <= 64; ++n) {
        lim.check_time();
        Exponents target = exp_pow(f, n);
        std::vector<size_t> combo;
        auto search = [&](auto&& self, size_t start, int64_t remaining,
                          const Exponents& acc) -> bool {
            if (remaining == 0) return exp_divides(acc, target);
            for (size_t i = start; i < gens.size(); ++i) {
                Exponents next = exp_mul(acc, gens[i]);
                if (!exp_divides(next, target)) continue; // already exceeds f^n somewhere
                combo.push_back(i);
                if (self(self, i, remaining - 1, next)) return true;
                combo.pop_back();
            }
            return false;
        };
        Exponents zero(d, 0);
        if (search(search, 0, n, zero)) {
            rep.degree = n;
            rep.combo = combo;
            Exponents prod(d, 0);
            for (size_t i : combo) prod = exp_mul(prod, gens[i]);
            rep.residual = exp_div(target, prod);
            // per-chart dehomogenized equations (f/z_i)^n = product/(z_i^n) * residual
            for (size_t i = 0; i < gens.size(); ++i) {
                std::ostringstream os;
                os << "chart " << (i + 1) << ": (f/z" << (i + 1) << ")^" << n << " = ";
                for (size_t k = 0; k < combo.size(); ++k) {
                    if (k) os << " * ";
                    os << "(z" << (combo[k] + 1) << "/z" << (i + 1) << ")";
                }
                os << " * m, m monomial";
                rep.chart_equations.push_back(os.str());
            }
            return rep;
        }
    }
    throw ResourceLimitError("no integral equation of degree <= 64 found");
}

int64_t relative_canonical_maxideal(int d) {
    if (d < 1 || d > 8) throw DomainError("dimension must be in [1,8]");
    if (d == 1) return 0; // blowup of a principal ideal is an isomorphism

    // chart ring k[u, v2..vd]; substitution x1 = u, xj = u*vj
    std::vector<std::string> vars;
    vars.push_back("u");
    for (int j = 2; j <= d; ++j) vars.push_back("v" + std::to_string(j));
    Ring ring = make_rational_ring(vars, MonomialOrder::grevlex());

    std::vector<Polynomial> subs;
    Polynomial u = Polynomial::variable(ring, 0);
    subs.push_back(u);
    for (int j = 2; j <= d; ++j)
        subs.push_back(u * Polynomial::variable(ring, static_cast<size_t>(j - 1)));

    // Jacobian matrix of the substitution, then exact determinant
    std::vector<std::vector<Polynomial>> jac(static_cast<size_t>(d),
                                             std::vector<Polynomial>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            jac[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                subs[static_cast<size_t>(i)].derivative(static_cast<size_t>(k));

    // cofactor expansion along the first column (entries are sparse)
    auto det = [&](auto&& self, std::vector<std::vector<Polynomial>> m) -> Polynomial {
        size_t n = m.size();
        if (n == 1) return m[0][0];
        Polynomial acc = Polynomial::zero(ring);
        for (size_t r = 0; r < n; ++r) {
            if (m[r][0].is_zero()) continue;
            std::vector<std::vector<Polynomial>> minor;
            for (size_t rr = 0; rr < n; ++rr) {
                if (rr == r) continue;
                minor.emplace_back(m[rr].begin() + 1, m[rr].end());
            }
            Polynomial term = m[r][0] * self(self, std::move(minor));
            acc = (r % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    Polynomial jdet = det(det, jac);
    if (jdet.is_zero()) throw Error("internal error: singular Jacobian");

    // order of vanishing in u
    int64_t ord = -1;
    for (const auto& [e, c] : jdet.terms()) {
        if (ord < 0 || e[0] < ord) ord = e[0];
    }
    return ord;
}

MonomialIdeal twisted_sections_maxideal(const Ring& ring, int64_t k, int64_t h) {
    int64_t need = std::max<int64_t>(0, h - k);
    if (need == 0) return MonomialIdeal::unit(ring);
    size_t d = ring->nvars();
    std::vector<Exponents> gens;
    Exponents v(d, 0);
    auto walk = [&](auto&& self, size_t i, int64_t remaining) -> void {
        if (i + 1 == d) {
            v[i] = remaining;
            gens.push_back(v);
            return;
        }
        for (int64_t x = 0; x <= remaining; ++x) {
            v[i] = x;
            self(self, i + 1, remaining - x);
        }
        v[i] = 0;
    };
    walk(walk, 0, need);
    return MonomialIdeal(ring, std::move(gens));
}

} // namespace symalg
