#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixture_util.hpp"
#include "wstrat/engine.hpp"

using namespace wtest;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
    return parse_poly(s, r);
}

// S-polynomial under grevlex, built from the structural leading terms.
Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
    const Term& lf = f.leading();
    const Term& lg = g.leading();
    Monomial lcm = lf.mon.lcm(lg.mon);
    return f.mul_term(lcm.div(lf.mon), Rational(1) / lf.coeff) -
           g.mul_term(lcm.div(lg.mon), Rational(1) / lg.coeff);
}

}  // namespace

TEST_CASE("kernel battery: groebner bases, elimination, saturation, dim") {
    json battery = load_fixture("kernel_battery.json");
    for (const auto& item : battery["items"]) {
        CAPTURE(item["name"].get<std::string>());
        RingPtr ring = ring_from(item["vars"]);
        Ideal I = ideal_from(item["gens"], ring);

        CHECK(canon_strings(I) == canon_strings(item["gb"], ring));

        if (item.contains("gb_lex")) {
            std::vector<std::string> mine;
            for (const Polynomial& g : I.groebner(TermOrder::lex()))
                mine.push_back(to_string(g));
            std::sort(mine.begin(), mine.end());
            std::vector<std::string> want;
            Ideal expected = ideal_from(item["gb_lex"], ring);
            for (const Polynomial& g : expected.groebner(TermOrder::lex()))
                want.push_back(to_string(g));
            std::sort(want.begin(), want.end());
            CHECK(mine == want);
        }

        CHECK(affine_dimension(I) == item["dim"].get<int>());

        if (item.contains("elim")) {
            std::vector<std::string> drop;
            for (const auto& v : item["elim"]["drop"])
                drop.push_back(v.get<std::string>());
            Ideal cut = eliminate(I, drop);
            CHECK(canon_strings(cut) ==
                  canon_strings(item["elim"]["result"], cut.ring()));
            // Soundness: generators lift to members of I and avoid the
            // dropped variables.
            for (const Polynomial& g : cut.gens()) {
                CHECK(ideal_membership(g.map_to(ring), I));
                for (const std::string& name : drop)
                    CHECK(cut.ring()->index_of(name) == -1);
            }
        }

        if (item.contains("sat")) {
            Polynomial by = P(ring, item["sat"]["by"].get<std::string>());
            Ideal S = saturate(I, by);
            CHECK(canon_strings(S) == canon_strings(item["sat"]["result"], ring));
            // Stabilization: saturating again changes nothing.
            CHECK(ideal_eq(quotient(S, by), S));
        }
    }
}

TEST_CASE("buchberger criterion holds on battery bases") {
    json battery = load_fixture("kernel_battery.json");
    int checked = 0;
    for (const auto& item : battery["items"]) {
        RingPtr ring = ring_from(item["vars"]);
        Ideal I = ideal_from(item["gens"], ring);
        const auto& gb = I.groebner(TermOrder::grevlex());
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j) {
                Polynomial s = s_poly(gb[i], gb[j]);
                CHECK(normal_form(s, gb, TermOrder::grevlex()).is_zero());
                ++checked;
            }
        // Every input generator reduces to zero against the basis.
        for (const Polynomial& g : I.gens())
            CHECK(normal_form(g, gb, TermOrder::grevlex()).is_zero());
    }
    CHECK(checked > 0);
}

TEST_CASE("reduced basis is independent of generator presentation") {
    auto r = Ring::make({"x", "y", "z"});
    std::vector<Polynomial> gens = {P(r, "x^2 - y"), P(r, "x^3 - z")};
    Ideal a(r, gens);
    Ideal b(r, {gens[1], gens[0], gens[0] * gens[1],
                gens[0] + P(r, "y") * gens[1]});
    CHECK(canon_strings(a) == canon_strings(b));
    for (const auto& ord : {TermOrder::lex(), TermOrder::grevlex()}) {
        auto ga = a.groebner(ord), gbb = b.groebner(ord);
        CHECK(ga.size() == gbb.size());
        for (size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gbb[i]);
    }
}

TEST_CASE("groebner corner cases") {
    auto r = Ring::make({"x", "y"});
    CHECK(Ideal(r, {}).groebner().empty());
    CHECK(Ideal(r, {Polynomial(r)}).groebner().empty());
    auto unit = Ideal(r, {P(r, "3")});
    REQUIRE(unit.groebner().size() == 1);
    CHECK(to_string(unit.groebner()[0]) == "1");
    CHECK(unit.is_unit());
    CHECK_FALSE(Ideal(r, {}).is_unit());
    // Principal ideals normalize to the primitive generator.
    Ideal princ(r, {P(r, "-2*x*y^2 + 4*y^2")});
    REQUIRE(princ.groebner().size() == 1);
    CHECK(to_string(princ.groebner()[0]) == "x*y^2 - 2*y^2");
}

TEST_CASE("lex basis and normal form follow the elimination example") {
    auto r = Ring::make({"x", "y", "z"});
    Ideal I(r, {P(r, "x^2 - y"), P(r, "x^3 - z")});
    bool has = false;
    for (const Polynomial& g : I.groebner(TermOrder::lex()))
        if (g == P(r, "y^3 - z^2")) has = true;
    CHECK(has);
    CHECK(normal_form(P(r, "y^3"), I.groebner(TermOrder::lex()),
                      TermOrder::lex()) == P(r, "z^2"));
    CHECK(normal_form(P(r, "x^2"), {P(r, "x")}, TermOrder::lex()).is_zero());
    CHECK(normal_form(P(r, "x^2 + y"), {P(r, "x")}, TermOrder::lex()) ==
          P(r, "y"));
    // Exactness over the rationals: f - nf lies in the ideal.
    Polynomial f = P(r, "1/3*x^2*y^3 + 7*z - 2/5");
    Polynomial nf = normal_form(f, I.groebner(), TermOrder::grevlex());
    CHECK(ideal_membership(f - nf, I));
}

TEST_CASE("membership and radical membership") {
    auto r = Ring::make({"x0", "x1", "x2", "x3"});
    auto r2 = Ring::make({"x", "y"});
    Ideal I(r2, {P(r2, "x"), P(r2, "y")});
    CHECK(ideal_membership(P(r2, "x"), I));
    CHECK_FALSE(ideal_membership(P(r2, "x"), Ideal(r2, {P(r2, "x^2")})));
    Ideal pr(r, {P(r, "x0*x1^2 - x1^2*x2")});
    CHECK(ideal_membership(P(r, "x1^2*(x0 - x2)"), pr));

    CHECK(radical_membership(P(r2, "x"), Ideal(r2, {P(r2, "x^2")})));
    CHECK_FALSE(radical_membership(P(r2, "y"), Ideal(r2, {P(r2, "x^2")})));
    CHECK(radical_membership(P(r, "x1*(x0 - x2)"), pr));
    CHECK_FALSE(radical_membership(P(r, "x1 - x2"), pr));
    // Zero ideal: only zero is in the radical.
    CHECK_FALSE(radical_membership(P(r2, "x"), Ideal(r2, {})));
    CHECK(radical_membership(Polynomial(r2), Ideal(r2, {})));
}

TEST_CASE("elimination examples") {
    auto r = Ring::make({"t", "x", "y"});
    Ideal I(r, {P(r, "t - x"), P(r, "t - y")});
    Ideal cut = eliminate(I, {"t"});
    CHECK(canon_strings(cut) == std::vector<std::string>{"x - y"});

    auto r4 = Ring::make({"x0", "x1", "x2", "x3", "xi0"},
                         {{"x", 0, 4}, {"xi", 4, 1}});
    Ideal J(r4, {P(r4, "x0"), P(r4, "xi0")});
    Ideal cut2 = eliminate(J, {"xi0"});
    CHECK(canon_strings(cut2) == std::vector<std::string>{"x0"});
    CHECK(cut2.ring()->arity() == 4);
    CHECK(cut2.ring()->blocks().size() == 1);
}

TEST_CASE("intersection, quotient, saturation examples") {
    auto r = Ring::make({"x", "y"});
    auto canon = [&](const Ideal& I) { return canon_strings(I); };
    CHECK(canon(intersect(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "y")}))) ==
          std::vector<std::string>{"x*y"});
    CHECK(canon(intersect(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "x")}))) ==
          std::vector<std::string>{"x"});

    auto r4 = Ring::make({"x0", "x1", "x2", "x3"});
    Ideal lines = intersect(Ideal(r4, {P(r4, "x0"), P(r4, "x3")}),
                            Ideal(r4, {P(r4, "x2"), P(r4, "x3")}));
    CHECK(canon(lines) == std::vector<std::string>{"x0*x2", "x3"});

    CHECK(canon(quotient(Ideal(r, {P(r, "x^2*y")}), P(r, "x"))) ==
          std::vector<std::string>{"x*y"});
    CHECK(canon(quotient(Ideal(r, {P(r, "x")}), P(r, "y"))) ==
          std::vector<std::string>{"x"});
    CHECK(canon(quotient(Ideal(r, {P(r, "x*y"), P(r, "y^2")}), P(r, "y"))) ==
          std::vector<std::string>{"x", "y"});
    // <x^2 y> : <x, y> = <xy> intersect <x^2> = <x^2 y>.
    CHECK(canon(quotient(Ideal(r, {P(r, "x^2*y")}),
                         Ideal(r, {P(r, "x"), P(r, "y")}))) ==
          std::vector<std::string>{"x^2*y"});

    CHECK(canon(saturate(Ideal(r, {P(r, "x^2*y")}), P(r, "x"))) ==
          std::vector<std::string>{"y"});
    CHECK(canon(saturate(Ideal(r, {P(r, "x")}), P(r, "y"))) ==
          std::vector<std::string>{"x"});
    // Saturation by a unit-containing ideal is the identity.
    Ideal I0(r, {P(r, "x")});
    CHECK(canon(saturate(I0, Ideal(r, {P(r, "1"), P(r, "y")}))) ==
          std::vector<std::string>{"x"});

    // The zero ideal absorbs intersections.
    CHECK(intersect(Ideal(r, {}), Ideal(r, {P(r, "x")})).is_zero());
    CHECK(intersect(Ideal(r, {P(r, "x")}), Ideal(r, {})).is_zero());
}

TEST_CASE("dimension in affine and projective contexts") {
    auto r4 = Ring::make({"x0", "x1", "x2", "x3"});
    ProjectiveContext p3 = ProjectiveContext::all_blocks(r4);
    REQUIRE(p3.irrelevant_blocks.size() == 1);

    CHECK(dimension(Ideal(r4, {parse_poly("x0*x1^2 - x1^2*x2", r4)}), p3) == 2);
    CHECK(dimension(Ideal(r4, {parse_poly("1", r4)}), p3) == -1);
    CHECK(dimension(Ideal(r4, {parse_poly("x2", r4), parse_poly("x3", r4)}),
                    p3) == 1);
    // Zero ideal cuts out the whole projective space.
    CHECK(dimension(Ideal(r4, {}), p3) == 3);
    // Irrelevant-supported ideals are empty.
    CHECK(dimension(Ideal(r4, {P(r4, "x0"), P(r4, "x1"), P(r4, "x2"),
                               P(r4, "x3")}),
                    p3) == -1);
    CHECK_THROWS_AS(dimension(Ideal(r4, {parse_poly("x0 + 1", r4)}), p3),
                    structural_error);

    CHECK(affine_dimension(Ideal(r4, {})) == 4);
    CHECK(affine_dimension(Ideal(r4, {parse_poly("1", r4)})) == -1);
}

TEST_CASE("projective emptiness via block saturation") {
    auto r4 = Ring::make({"x0", "x1", "x2", "x3"});
    ProjectiveContext p3 = ProjectiveContext::all_blocks(r4);
    auto gens = [&](std::initializer_list<const char*> xs) {
        std::vector<Polynomial> out;
        for (const char* s : xs) out.push_back(parse_poly(s, r4));
        return Ideal(r4, std::move(out));
    };
    CHECK(is_empty_projective(gens({"x0", "x1", "x2", "x3"}), p3));
    CHECK_FALSE(is_empty_projective(gens({"x0"}), p3));
    CHECK(is_empty_projective(gens({"x0^2", "x1^2", "x2^2", "x3^2"}), p3));

    // Mixed two-block cone: empty even though no single block saturates to
    // the unit ideal.
    auto biring = Ring::make({"x0", "x1", "xi0", "xi1"},
                             {{"x", 0, 2}, {"xi", 2, 2}});
    ProjectiveContext bi = ProjectiveContext::all_blocks(biring);
    std::vector<Polynomial> mixed;
    for (const char* s : {"x0*xi0", "x0*xi1", "x1*xi0", "x1*xi1"})
        mixed.push_back(parse_poly(s, biring));
    Ideal M(biring, mixed);
    CHECK(is_empty_projective(M, bi));
    CHECK(dimension(M, bi) == -1);
}

TEST_CASE("containment predicates") {
    auto r = Ring::make({"x", "y"});
    Ideal big(r, {P(r, "x")});
    Ideal small(r, {P(r, "x^2"), P(r, "x*y")});
    CHECK(ideal_contains(big, small));
    CHECK_FALSE(ideal_contains(small, big));
    CHECK(ideal_eq(big, Ideal(r, {P(r, "2*x")})));
    // V(x^2, xy) = V(x) even though the ideals differ.
    CHECK(same_variety(small, big));
    CHECK(variety_contains(small, big));
    CHECK(variety_contains(big, small));
    CHECK_FALSE(same_variety(big, Ideal(r, {P(r, "y")})));
}

TEST_CASE("deadline interrupts long computations") {
    auto r = Ring::make({"a", "b", "c", "d", "e", "f", "g"});
    // Cyclic-7-style system: hard enough to outlive a microscopic budget.
    std::vector<Polynomial> gens;
    std::vector<std::string> names = {"a", "b", "c", "d", "e", "f", "g"};
    for (int k = 1; k <= 6; ++k) {
        Polynomial sum(r);
        for (int s = 0; s < 7; ++s) {
            Polynomial prod = Polynomial::constant(r, Rational(1));
            for (int j = 0; j < k; ++j)
                prod = prod * P(r, names[(s + j) % 7]);
            sum = sum + prod;
        }
        gens.push_back(sum);
    }
    Polynomial all = Polynomial::constant(r, Rational(1));
    for (const auto& n : names) all = all * P(r, n);
    gens.push_back(all - Polynomial::constant(r, Rational(1)));

    Engine::get().set_deadline_after(0.05);
    CHECK_THROWS_AS(Ideal(r, gens).groebner(), timeout_error);
    Engine::get().clear_deadline();
}
