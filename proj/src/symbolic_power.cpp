#include "symalg/symbolic_power.hpp"

#include <chrono>
#include <sstream>

namespace symalg {

MonomialIdeal symbolic_power_squarefree_monomial(const MonomialIdeal& M, int64_t n,
                                                 const Limits& lim) {
    if (!M.is_squarefree()) throw DomainError("symbolic power needs a squarefree monomial ideal");
    if (M.is_zero()) throw DomainError("symbolic power of the zero ideal");
    if (n < 0) throw DomainError("negative symbolic power");
    if (n == 0 || M.is_unit()) return MonomialIdeal::unit(M.ring());
    if (n == 1) return M;

    auto primes = minimal_primes_squarefree(M);
    size_t d = M.nvars();

    // variables outside every generator support never appear in minimal
    // generators; don't enumerate over them
    std::vector<int> active;
    {
        std::vector<bool> used(d, false);
        for (const auto& p : primes)
            for (int v : p) used[static_cast<size_t>(v)] = true;
        for (size_t i = 0; i < d; ++i)
            if (used[i]) active.push_back(static_cast<int>(i));
    }

    int64_t cells = 1;
    for (size_t i = 0; i < active.size(); ++i) {
        cells *= n + 1;
        if (cells > lim.max_enumeration)
            throw ResourceLimitError("symbolic power lattice budget exceeded");
    }

    auto cover_ok = [&](const Exponents& v) {
        for (const auto& p : primes) {
            int64_t s = 0;
            for (int j : p) s += v[static_cast<size_t>(j)];
            if (s < n) return false;
        }
        return true;
    };

    std::vector<Exponents> found;
    Exponents v(d, 0);
    auto walk = [&](auto&& self, size_t i) -> void {
        if (i == active.size()) {
            if (!cover_ok(v)) return;
            for (int j : active) {
                if (v[static_cast<size_t>(j)] == 0) continue;
                Exponents w = v;
                w[static_cast<size_t>(j)] -= 1;
                if (cover_ok(w)) return; // not a minimal member
            }
            found.push_back(v);
            return;
        }
        lim.check_time();
        for (int64_t x = 0; x <= n; ++x) {
            v[static_cast<size_t>(active[i])] = x;
            self(self, i + 1);
        }
        v[static_cast<size_t>(active[i])] = 0;
    };
    walk(walk, 0);
    return MonomialIdeal(M.ring(), std::move(found));
}

SymbolicPowerResult symbolic_power_squarefree(const MonomialIdeal& M, int64_t n,
                                              const Limits& lim) {
    SymbolicPowerResult res{symbolic_power_squarefree_monomial(M, n, lim).to_ideal(), n,
                            Certainty::exact, std::nullopt};
    return res;
}

SymbolicPowerResult symbolic_power_prime(const Ideal& Q, int64_t n, const Polynomial& witness,
                                         bool assert_exact, const Limits& lim) {
    if (n < 0) throw DomainError("negative symbolic power");
    if (Q.primality == Primality::unknown)
        throw DomainError("symbolic_power_prime requires an ideal asserted prime");
    if (witness.is_zero() || Q.contains(witness, lim))
        throw DomainError("witness element must lie outside the prime");
    if (n == 0)
        return {Ideal::unit(Q.ring()), 0, Certainty::exact, witness};
    if (n == 1) return {Q, 1, Certainty::exact, witness};

    Ideal qn = ideal_power(Q, n);
    Ideal sat = saturate(qn, witness, lim);
    SymbolicPowerResult res{sat, n, assert_exact ? Certainty::exact : Certainty::lower_bound,
                            witness};
    return res;
}

MainTheoremReport check_main_theorem_squarefree(const MonomialIdeal& I, int64_t m,
                                                const Limits& lim) {
    if (m < 1) throw DomainError("m must be positive");
    auto start = std::chrono::steady_clock::now();
    MainTheoremReport rep;
    rep.m = m;
    rep.height_bound = big_height_squarefree(I);
    rep.symbolic_level = m * rep.height_bound;
    MonomialIdeal sym = symbolic_power_squarefree_monomial(I, rep.symbolic_level, lim);
    MonomialIdeal ordinary = monomial_power(I, m);
    rep.holds = ordinary.contains(sym);
    std::ostringstream os;
    os << "I^(" << rep.symbolic_level << ") has " << sym.gens().size()
       << " minimal generators; I^" << m << " has " << ordinary.gens().size();
    rep.detail = os.str();
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    return rep;
}

MainTheoremReport check_main_theorem_prime(const Ideal& Q, int64_t h, int64_t m,
                                           const Polynomial& witness, bool assert_exact,
                                           const Limits& lim) {
    if (m < 1 || h < 1) throw DomainError("m and h must be positive");
    if (!assert_exact)
        throw DomainError("main theorem check needs exact symbolic powers; "
                          "pass assert_exact once the witness covers the embedded primes");
    auto start = std::chrono::steady_clock::now();
    MainTheoremReport rep;
    rep.m = m;
    rep.height_bound = h;
    rep.symbolic_level = m * h;
    SymbolicPowerResult sym = symbolic_power_prime(Q, rep.symbolic_level, witness, true, lim);
    Ideal ordinary = ideal_power(Q, m);
    rep.holds = ordinary.contains(sym.ideal, lim);
    rep.detail = "saturation-based symbolic power";
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    return rep;
}

} // namespace symalg
