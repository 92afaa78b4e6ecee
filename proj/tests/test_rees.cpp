#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "symalg/parser.hpp"
#include "symalg/rees.hpp"

using namespace symalg;
using symalg::testing::TestRng;

namespace {
Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }
Ideal I(const Ring& r, const std::string& gens) {
    return Ideal(r, parse_polynomial_list(gens, r));
}
} // namespace

TEST_CASE("rees presentation of a principal ideal is free") {
    Ring r = make_rational_ring({"x", "y"});
    ReesPresentation rp = rees_presentation(I(r, "x"));
    CHECK(rp.presentation.empty());
}

TEST_CASE("rees presentation of the maximal ideal in two variables") {
    Ring r = make_rational_ring({"x", "y"});
    ReesPresentation rp = rees_presentation(I(r, "x, y"));
    REQUIRE(rp.presentation.gens().size() == 1);
    Polynomial g = rp.presentation.gens()[0];
    Polynomial expected = P(rp.rees_ring, "x*T2 - y*T1");
    CHECK((g == expected || g == -expected));
}

TEST_CASE("rees presentation of (x,y,z) equals the 2x2 minors") {
    Ring r = make_rational_ring({"x", "y", "z"});
    ReesPresentation rp = rees_presentation(I(r, "x, y, z"));
    Ring rr = rp.rees_ring;
    Ideal pres(rr, rp.presentation.gens());
    Ideal minors(rr, {P(rr, "x*T2 - y*T1"), P(rr, "x*T3 - z*T1"), P(rr, "y*T3 - z*T2")});
    CHECK(pres.equals(minors));
}

TEST_CASE("presentation is homogeneous in the T variables") {
    Ring r = make_rational_ring({"x", "y", "z"});
    for (const auto& gens : {"x, y, z", "x^2, x*y, y^2", "x*y, z^2"}) {
        ReesPresentation rp = rees_presentation(I(r, gens));
        size_t nb = r->nvars();
        for (const auto& g : rp.presentation.gens()) {
            int64_t tdeg = -1;
            for (const auto& [e, c] : g.terms()) {
                int64_t d = 0;
                for (size_t i = nb; i < e.size(); ++i) d += e[i];
                if (tdeg < 0) tdeg = d;
                CHECK(d == tdeg);
            }
        }
    }
}

TEST_CASE("substituting T_j -> z_j t kills the presentation") {
    Ring r = make_rational_ring({"x", "y"});
    ReesPresentation rp = rees_presentation(I(r, "x^2, x*y, y^2"));
    // map into r extended by t and substitute
    std::vector<std::string> vars = r->vars();
    vars.push_back("t");
    for (size_t j = 1; j <= rp.ideal_gens.size(); ++j) vars.push_back("T" + std::to_string(j));
    Ring big = make_rational_ring(vars);
    Polynomial t = Polynomial::variable(big, r->nvars());
    for (const auto& g : rp.presentation.gens()) {
        Polynomial lifted = g.map_to(big);
        for (size_t j = 0; j < rp.ideal_gens.size(); ++j) {
            size_t tj = r->nvars() + 1 + j;
            lifted = lifted.substitute(tj, rp.ideal_gens[j].map_to(big) * t);
        }
        CHECK(lifted.is_zero());
    }
}

TEST_CASE("charts of the maximal-ideal blowup") {
    Ring r = make_rational_ring({"x", "y"});
    ReesPresentation rp = rees_presentation(I(r, "x, y"));
    BlowupChart u1 = chart(rp, 1);
    // chart ring Q[x, y, T2] with y = x*T2
    REQUIRE(u1.relations.size() == 1);
    Polynomial rel = u1.relations[0];
    Polynomial expected = P(u1.chart_ring, "x*T2 - y");
    CHECK((rel == expected || rel == -expected));

    BlowupChart u2 = chart(rp, 2);
    REQUIRE(u2.relations.size() == 1);
    Polynomial rel2 = u2.relations[0];
    Polynomial expected2 = P(u2.chart_ring, "y*T1 - x");
    CHECK((rel2 == expected2 || rel2 == -expected2));

    CHECK_THROWS_AS(chart(rp, 0), DomainError);
    CHECK_THROWS_AS(chart(rp, 3), DomainError);
}

TEST_CASE("principal chart is the base ring") {
    Ring r = make_rational_ring({"x", "y"});
    ReesPresentation rp = rees_presentation(I(r, "x"));
    BlowupChart u = chart(rp, 1);
    CHECK(u.relations.empty());
    CHECK(u.chart_ring->nvars() == r->nvars());
}

TEST_CASE("charts glue on the overlap for the d=2 maximal-ideal blowup") {
    Ring r = make_rational_ring({"x", "y"});
    ReesPresentation rp = rees_presentation(I(r, "x, y"));
    BlowupChart u1 = chart(rp, 1);
    BlowupChart u2 = chart(rp, 2);
    // on the overlap T2 (chart 1) and T1 (chart 2) are mutually inverse:
    // substituting T2 -> 1/T1 into chart-1 relations and clearing the
    // denominator must land in the chart-2 ideal, and symmetrically
    Ring both = make_rational_ring({"x", "y", "T1", "T2"});
    auto cleared_substitution = [&](const Polynomial& rel, size_t from, size_t inverse) {
        // substitute T_from -> 1/T_inverse and clear the denominator
        Polynomial lifted = rel.map_to(both);
        int64_t deg = 0;
        for (const auto& [e, c] : lifted.terms()) deg = std::max(deg, e[from]);
        Polynomial cleared = Polynomial::zero(both);
        for (const auto& [e, c] : lifted.terms()) {
            Exponents e2 = e;
            int64_t k = e2[from];
            e2[from] = 0;
            e2[inverse] += deg - k;
            cleared.add_term(e2, c);
        }
        return cleared;
    };
    Ideal overlap_from_2(both, {u2.relations[0].map_to(both), P(both, "T1*T2 - 1")});
    for (const auto& rel : u1.relations)
        CHECK(overlap_from_2.contains(cleared_substitution(rel, 3, 2)));
    Ideal overlap_from_1(both, {u1.relations[0].map_to(both), P(both, "T1*T2 - 1")});
    for (const auto& rel : u2.relations)
        CHECK(overlap_from_1.contains(cleared_substitution(rel, 2, 3)));
}

TEST_CASE("chart substitution identity holds for every generator") {
    // z_j = (z_j/z_i) z_i in chart i: z_j - T_j z_i lies in the chart ideal
    Ring r = make_rational_ring({"x", "y", "z"});
    Ideal m = I(r, "x, y, z");
    ReesPresentation rp = rees_presentation(m);
    for (int i = 1; i <= 3; ++i) {
        BlowupChart u = chart(rp, i);
        Ideal chart_ideal(u.chart_ring, u.relations);
        for (size_t j = 1; j <= 3; ++j) {
            if (j == static_cast<size_t>(i)) continue;
            Polynomial zj = rp.ideal_gens[j - 1].map_to(u.chart_ring);
            Polynomial zi = rp.ideal_gens[static_cast<size_t>(i) - 1].map_to(u.chart_ring);
            Polynomial tj = P(u.chart_ring, "T" + std::to_string(j));
            CHECK(chart_ideal.contains(zj - tj * zi));
        }
    }
}

TEST_CASE("integral extension: worked examples") {
    Ring r = make_rational_ring({"x", "y"});
    MonomialIdeal J = MonomialIdeal::from_ideal(I(r, "x^2, y^2"));
    IntegralityReport rep = integral_extension_chart(J, Exponents{1, 1});
    CHECK(rep.degree == 2);
    CHECK(rep.combo.size() == 2);

    // f in J: degree-1 equation
    IntegralityReport triv = integral_extension_chart(J, Exponents{2, 0});
    CHECK(triv.degree == 1);

    MonomialIdeal J3 = MonomialIdeal::from_ideal(I(r, "x^3, y^3"));
    IntegralityReport deg3 = integral_extension_chart(J3, Exponents{2, 1});
    CHECK(deg3.degree == 3);
}

TEST_CASE("integral extension rejects non-integral monomials") {
    Ring r = make_rational_ring({"x", "y"});
    MonomialIdeal J = MonomialIdeal::from_ideal(I(r, "x^2, y^2"));
    CHECK_THROWS_AS(integral_extension_chart(J, Exponents{1, 0}), DomainError);
    CHECK_THROWS_AS(integral_extension_chart(J, Exponents{0, 1}), DomainError);
}

TEST_CASE("integral extension accepts exactly the Newton polyhedron") {
    TestRng rng(505);
    Ring r = make_rational_ring({"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Exponents> gens;
        for (int i = 0, n = static_cast<int>(rng.range(1, 3)); i < n; ++i)
            gens.push_back(rng.exponents(3, 4));
        MonomialIdeal J(r, gens);
        NewtonPolyhedron np = newton_polyhedron(J);
        for (int k = 0; k < 10; ++k) {
            Exponents v = rng.exponents(3, 6);
            if (np.contains(v)) {
                CHECK(integral_extension_chart(J, v).degree >= 1);
            } else {
                CHECK_THROWS_AS(integral_extension_chart(J, v), DomainError);
            }
        }
    }
}

TEST_CASE("relative canonical of the maximal-ideal blowup is d-1") {
    for (int d = 1; d <= 8; ++d) CHECK(relative_canonical_maxideal(d) == d - 1);
    CHECK_THROWS_AS(relative_canonical_maxideal(0), DomainError);
    CHECK_THROWS_AS(relative_canonical_maxideal(9), DomainError);
}

TEST_CASE("twisted sections of the maximal-ideal blowup") {
    Ring r2 = make_rational_ring({"x", "y"});
    // K = 1E, E = 2E: sections vanish to order >= 1: the maximal ideal
    MonomialIdeal s = twisted_sections_maxideal(r2, 1, 2);
    CHECK(s.equals(MonomialIdeal::from_ideal(I(r2, "x, y"))));
    // h <= k: no condition
    CHECK(twisted_sections_maxideal(r2, 3, 2).is_unit());
    Ring r3 = make_rational_ring({"x", "y", "z"});
    MonomialIdeal s3 = twisted_sections_maxideal(r3, 2, 3);
    CHECK(s3.equals(MonomialIdeal::from_ideal(I(r3, "x, y, z"))));
    // h >= d forces sections inside the maximal ideal
    for (int64_t h = 3; h <= 5; ++h) {
        MonomialIdeal sect = twisted_sections_maxideal(r3, 2, h);
        CHECK(MonomialIdeal::from_ideal(I(r3, "x, y, z")).contains(sect));
    }
}
