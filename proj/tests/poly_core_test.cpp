#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wstrat/poly.hpp"
#include "wstrat/poly_io.hpp"

using namespace wstrat;

namespace {

RingPtr pring() { return Ring::make({"x0", "x1", "x2", "x3"}); }

Polynomial P(const RingPtr& r, const std::string& s) {
    return parse_poly(s, r);
}

Monomial mono(std::initializer_list<std::uint32_t> exps) {
    Monomial m(static_cast<int>(exps.size()));
    int i = 0;
    for (auto e : exps) m.set(i++, e);
    return m;
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(0, 3),
        coeff(-6, 6);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(r->arity());
        for (int v = 0; v < r->arity(); ++v)
            m.set(v, static_cast<std::uint32_t>(expd(rng)));
        ts.push_back({std::move(m), Rational(coeff(rng))});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("ring construction and lookup") {
    auto r = Ring::make({"x0", "x1", "x2", "x3", "xi0", "xi1", "xi2", "xi3"},
                        {{"x", 0, 4}, {"xi", 4, 4}});
    CHECK(r->arity() == 8);
    CHECK(r->index_of("xi2") == 6);
    CHECK(r->index_of("nope") == -1);
    CHECK(r->blocks().size() == 2);
    REQUIRE(r->block("xi") != nullptr);
    CHECK(r->block("xi")->first == 4);
    CHECK_THROWS_AS(Ring::make({"x", "x"}), structural_error);
    CHECK_THROWS_AS(
        Ring::make({"x", "y"}, {{"a", 0, 1}, {"b", 0, 1}}),
        structural_error);

    auto ext = r->extended({"t"}, "t");
    CHECK(ext->arity() == 9);
    CHECK(ext->index_of("t") == 8);
    CHECK(ext->blocks().size() == 3);

    std::vector<char> drop(8, 0);
    drop[0] = drop[1] = drop[2] = drop[3] = 1;
    auto cut = r->without(drop);
    CHECK(cut->arity() == 4);
    CHECK(cut->var(0) == "xi0");
    CHECK(cut->blocks().size() == 1);
}

TEST_CASE("monomial order: grevlex ties break toward smaller last exponent") {
    // In four variables: x0*x3 < x1*x2, and x0^2*x3 < x0*x1*x2.
    TermOrder g = TermOrder::grevlex();
    CHECK(g.cmp(mono({1, 0, 0, 1}), mono({0, 1, 1, 0})) < 0);
    CHECK(g.cmp(mono({2, 0, 0, 1}), mono({1, 1, 1, 0})) < 0);
    CHECK(g.cmp(mono({0, 0, 0, 3}), mono({1, 1, 0, 0})) > 0);  // degree wins
    CHECK(g.cmp(mono({1, 2, 0, 0}), mono({1, 2, 0, 0})) == 0);

    TermOrder l = TermOrder::lex();
    CHECK(l.cmp(mono({1, 0, 0, 0}), mono({0, 9, 9, 9})) > 0);

    // Elimination order: compares the masked variables first.
    TermOrder e = TermOrder::elim({1, 1, 0, 0});
    CHECK(e.cmp(mono({1, 0, 0, 0}), mono({0, 0, 5, 5})) > 0);
    CHECK(e.cmp(mono({0, 1, 2, 0}), mono({1, 0, 0, 0})) < 0);
    CHECK(e.cmp(mono({1, 0, 2, 0}), mono({1, 0, 0, 1})) > 0);
}

TEST_CASE("polynomial arithmetic is a commutative ring") {
    auto r = pring();
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_poly(r, rng), b = random_poly(r, rng),
                   c = random_poly(r, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial(r));
        CHECK(a + Polynomial(r) == a);
        CHECK(a * Polynomial::constant(r, Rational(1)) == a);
        CHECK(a * Polynomial(r) == Polynomial(r));
    }
}

TEST_CASE("terms stay sorted and merged") {
    auto r = pring();
    Polynomial f = P(r, "x0*x1 + x1*x0 + x2 - 2*x2 + 1");
    CHECK(to_string(f) == "2*x0*x1 - x2 + 1");
    for (size_t i = 1; i < f.terms().size(); ++i)
        CHECK(TermOrder::grevlex().cmp(f.terms()[i - 1].mon,
                                       f.terms()[i].mon) > 0);
}

TEST_CASE("parse and print round-trip") {
    auto r = pring();
    std::vector<std::pair<std::string, std::string>> cases = {
        {"x0^2*x2^2 + x0*x3^3 - x1^2*x3^2",
         "x0^2*x2^2 - x1^2*x3^2 + x0*x3^3"},
        {"-x0*x3 + x1*x2", "x1*x2 - x0*x3"},
        {"0", "0"},
        {"5", "5"},
        {"-7", "-7"},
        {"x0 - 1", "x0 - 1"},
        {"3/2*x0^2 - 1/3", "3/2*x0^2 - 1/3"},
    };
    for (const auto& [input, canonical] : cases) {
        Polynomial f = P(r, input);
        CHECK(to_string(f) == canonical);
        CHECK(P(r, to_string(f)) == f);
    }
    CHECK(P(r, "(x0 + x1)^2") == P(r, "x0^2 + 2*x0*x1 + x1^2"));
    CHECK(P(r, "x0**2 - x1") == P(r, "x0^2 - x1"));
    CHECK(P(r, "-(x0 - x1)*(x0 + x1)") == P(r, "x1^2 - x0^2"));
    CHECK(P(r, "x0/2 + x1") == P(r, "1/2*x0 + x1"));
    CHECK_THROWS_AS(P(r, "y0 + 1"), parse_error);
    CHECK_THROWS_AS(P(r, "x0 + "), parse_error);
    CHECK_THROWS_AS(P(r, "x0 / x1"), parse_error);
}

TEST_CASE("degrees, homogeneity, derivative, substitution") {
    auto r = pring();
    Polynomial f = P(r, "x0^2*x2^2 + x0*x3^3 - x1^2*x3^2");
    CHECK(f.degree() == 4);
    CHECK(f.degree_in(3) == 3);
    CHECK(f.is_homogeneous());
    CHECK_FALSE(P(r, "x0^2 + x1").is_homogeneous());
    CHECK(f.derivative(0) == P(r, "2*x0*x2^2 + x3^3"));
    CHECK(f.derivative(1) == P(r, "-2*x1*x3^2"));
    CHECK(P(r, "7").derivative(2).is_zero());

    Polynomial g = f.substitute(0, P(r, "x1 + 1"));
    Polynomial expect =
        P(r, "(x1+1)^2*x2^2 + (x1+1)*x3^3 - x1^2*x3^2");
    CHECK(g == expect);
}

TEST_CASE("primitive scaling: integer content one, positive lead") {
    auto r = pring();
    CHECK(to_string(P(r, "4*x0 - 2*x1").primitive()) == "2*x0 - x1");
    CHECK(to_string(P(r, "-x0 + x1").primitive()) == "x0 - x1");
    CHECK(to_string(P(r, "1/2*x0 - 1/3*x1").primitive()) == "3*x0 - 2*x1");
    CHECK(P(r, "0").primitive().is_zero());
}

TEST_CASE("homogenize and dehomogenize round-trip") {
    auto aff = Ring::make({"x1", "x2", "x3"});
    auto proj = Ring::make({"x0", "x1", "x2", "x3"});
    Polynomial f = P(aff, "x2^2 + x3^3 - x1^2*x3^2");
    Polynomial h = homogenize(f, proj, 0);
    CHECK(h == P(proj, "x0^2*x2^2 + x0*x3^3 - x1^2*x3^2"));
    CHECK(h.is_homogeneous());
    CHECK(dehomogenize(h, 0, aff) == f);
}

TEST_CASE("map_to preserves terms across compatible rings") {
    auto small = Ring::make({"x1", "x3"});
    auto big = pring();
    Polynomial f = parse_poly("x1^2 - 3*x3", small);
    Polynomial g = f.map_to(big);
    CHECK(to_string(g) == "x1^2 - 3*x3");
    CHECK(g.ring() == big);
    CHECK_THROWS_AS(parse_poly("x0 - x2", big).map_to(small),
                    structural_error);
}

TEST_CASE("structural comparison is a total deterministic order") {
    auto r = pring();
    Polynomial a = P(r, "x0 + 1"), b = P(r, "x0 + 2"), c = P(r, "x1");
    CHECK(Polynomial::cmp(a, a) == 0);
    CHECK(Polynomial::cmp(a, b) == -Polynomial::cmp(b, a));
    CHECK(Polynomial::cmp(a, c) != 0);
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        Polynomial u = random_poly(r, rng), v = random_poly(r, rng);
        CHECK(Polynomial::cmp(u, v) == -Polynomial::cmp(v, u));
        if (Polynomial::cmp(u, v) == 0) CHECK(u == v);
    }
}
