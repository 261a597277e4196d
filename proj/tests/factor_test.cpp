#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "fixture_util.hpp"
#include "wstrat/factor.hpp"

using namespace wtest;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
    return parse_poly(s, r);
}

// (factor string, multiplicity) pairs sorted by factor string, so
// expectations are order-independent.
std::map<std::string, int> factor_map(const Polynomial& f) {
    std::map<std::string, int> m;
    for (const FactorUnit& u : squarefree_and_factor(f))
        m[to_string(u.factor)] += u.multiplicity;
    return m;
}

using FM = std::map<std::string, int>;

}  // namespace

TEST_CASE("polynomial gcd") {
    RingPtr r = Ring::make({"x", "y"});
    CHECK(to_string(poly_gcd(P(r, "x^2 - y^2"), P(r, "x^2 + 2*x*y + y^2"))) ==
          "x + y");
    CHECK(to_string(poly_gcd(P(r, "x^2 - 1"), P(r, "x^3 - 1"))) == "x - 1");
    CHECK(to_string(poly_gcd(P(r, "x*y"), P(r, "x^2"))) == "x");
    // Coprime polynomials: the gcd is the unit constant.
    CHECK(to_string(poly_gcd(P(r, "x + 1"), P(r, "y + 1"))) == "1");
    CHECK(to_string(poly_gcd(P(r, "x^2 + y^2"), P(r, "x^2 - y^2"))) == "1");
    // gcd with zero is the primitive part of the other argument.
    CHECK(to_string(poly_gcd(Polynomial(r), P(r, "4*x + 4*y"))) == "x + y");
    CHECK(to_string(poly_gcd(P(r, "-3*x"), Polynomial(r))) == "x");
    // Constants behave like units.
    CHECK(to_string(poly_gcd(P(r, "6"), P(r, "4*x"))) == "1");
    // Output is integer-primitive with positive leading coefficient.
    CHECK(to_string(poly_gcd(P(r, "-2*x^2 + 2*y^2"), P(r, "-6*x - 6*y"))) ==
          "x + y");
    CHECK(to_string(poly_gcd(P(r, "1/2*x^2 - 1/2*y^2"), P(r, "x + y"))) ==
          "x + y");
}

TEST_CASE("gcd of nested contents") {
    RingPtr r = Ring::make({"x", "y", "z"});
    // Shared factor hides in the coefficients with respect to x.
    Polynomial a = P(r, "y*z") * P(r, "x^2 + z");
    Polynomial b = P(r, "y^2") * P(r, "x - z");
    CHECK(to_string(poly_gcd(a, b)) == "y");
    Polynomial c = P(r, "x^2 - z^2") * P(r, "y + 1");
    Polynomial d = P(r, "x + z") * P(r, "y^2 - 1");
    Polynomial g = poly_gcd(c, d);
    CHECK(to_string(g) == "x*y + y*z + x + z");  // (x + z)(y + 1)
}

TEST_CASE("squarefree part") {
    RingPtr r = Ring::make({"x", "y"});
    CHECK(to_string(squarefree_part(P(r, "x^2"))) == "x");
    CHECK(to_string(squarefree_part(P(r, "x^2*y^3"))) == "x*y");
    CHECK(to_string(squarefree_part(
              P(r, "x^5 + x^4*y - 2*x^3*y^2 - 2*x^2*y^3 + x*y^4 + y^5"))) ==
          "x^2 - y^2");
    // Already squarefree input is only normalized.
    CHECK(to_string(squarefree_part(P(r, "2*x^2 - 2*y"))) == "x^2 - y");
    CHECK(to_string(squarefree_part(P(r, "7"))) == "1");

    RingPtr s = Ring::make({"x0", "x1", "x2"});
    CHECK(to_string(squarefree_part(P(s, "x0*x1^2 - x1^2*x2"))) ==
          "x0*x1 - x1*x2");
}

TEST_CASE("exact polynomial division") {
    RingPtr r = Ring::make({"x", "y"});
    Polynomial h = P(r, "x^2 - y^2");
    CHECK(to_string(poly_divide_exact(h, P(r, "x - y"))) == "x + y");
    CHECK(to_string(poly_divide_exact(h, P(r, "2*x + 2*y"))) ==
          "1/2*x - 1/2*y");
    CHECK(poly_divide_exact(Polynomial(r), P(r, "x")).is_zero());
    CHECK_THROWS_AS(poly_divide_exact(h, P(r, "x")), structural_error);
    CHECK_THROWS_AS(poly_divide_exact(h, Polynomial(r)), structural_error);
}

TEST_CASE("factorization: two-variable splits") {
    RingPtr r = Ring::make({"x", "y"});
    CHECK(factor_map(P(r, "x^2 - y^2")) == FM{{"x - y", 1}, {"x + y", 1}});
    CHECK(factor_map(P(r, "x^2 + y^2")) == FM{{"x^2 + y^2", 1}});
    CHECK(factor_map(P(r, "x^4 - y^4")) ==
          FM{{"x - y", 1}, {"x + y", 1}, {"x^2 + y^2", 1}});
    CHECK(factor_map(P(r, "x^2*y - y^3")) ==
          FM{{"y", 1}, {"x - y", 1}, {"x + y", 1}});
    // Scalar content never appears as a factor.
    CHECK(factor_map(P(r, "6*x^2 - 6*y^2")) == FM{{"x - y", 1}, {"x + y", 1}});
    CHECK(factor_map(P(r, "1/2*x^2 - 1/2*y^2")) ==
          FM{{"x - y", 1}, {"x + y", 1}});
}

TEST_CASE("factorization: multiplicities") {
    RingPtr s = Ring::make({"x0", "x1", "x2"});
    CHECK(factor_map(P(s, "x0*x1^2 - x1^2*x2")) ==
          FM{{"x1", 2}, {"x0 - x2", 1}});

    json battery = load_fixture("kernel_battery.json");
    for (const auto& item : battery["items"]) {
        std::string name = item["name"].get<std::string>();
        if (name.rfind("B06", 0) != 0) continue;
        RingPtr r = ring_from(item["vars"]);
        Polynomial f = parse_poly(item["gens"][0].get<std::string>(), r);
        CHECK(factor_map(f) == FM{{"x + y", 3}, {"x - y", 2}});
    }
}

TEST_CASE("factorization: univariate") {
    json battery = load_fixture("kernel_battery.json");
    for (const auto& item : battery["items"]) {
        std::string name = item["name"].get<std::string>();
        if (name.rfind("B10", 0) != 0) continue;
        RingPtr r = ring_from(item["vars"]);
        Polynomial f = parse_poly(item["gens"][0].get<std::string>(), r);
        CHECK(factor_map(f) == FM{{"x^2 - 2", 1}, {"x^2 - 3", 1}});
    }

    RingPtr r = Ring::make({"x"});
    // Needs modular factor recombination: the factors stay irreducible
    // modulo every prime.
    CHECK(factor_map(P(r, "x^4 + 4")) ==
          FM{{"x^2 - 2*x + 2", 1}, {"x^2 + 2*x + 2", 1}});
    CHECK(factor_map(P(r, "x^4 + x^3 + x^2 + x + 1")) ==
          FM{{"x^4 + x^3 + x^2 + x + 1", 1}});
    CHECK(factor_map(P(r, "x^2 - 1")) == FM{{"x - 1", 1}, {"x + 1", 1}});
    CHECK(factor_map(P(r, "x^3 + x")) == FM{{"x", 1}, {"x^2 + 1", 1}});
    // Non-monic input exercises the monic transform and its inverse.
    CHECK(factor_map(P(r, "6*x^2 + 5*x + 1")) ==
          FM{{"2*x + 1", 1}, {"3*x + 1", 1}});
    CHECK(factor_map(P(r, "4*x^2 - 1")) ==
          FM{{"2*x - 1", 1}, {"2*x + 1", 1}});
    CHECK(factor_map(P(r, "x^6 - 1")) ==
          FM{{"x - 1", 1},
             {"x + 1", 1},
             {"x^2 - x + 1", 1},
             {"x^2 + x + 1", 1}});
}

TEST_CASE("factorization: non-constant leading coefficient in main variable") {
    RingPtr r = Ring::make({"x", "y"});
    // (x*y + 1)(x + y): the leading coefficient in x is y.
    CHECK(factor_map(P(r, "x^2*y + x*y^2 + x + y")) ==
          FM{{"x*y + 1", 1}, {"x + y", 1}});
    // (2*x + y)(3*x + y^2)
    CHECK(factor_map(P(r, "6*x^2 + 2*x*y^2 + 3*x*y + y^3")) ==
          FM{{"2*x + y", 1}, {"y^2 + 3*x", 1}});
}

TEST_CASE("factorization: hypersurfaces in four variables") {
    RingPtr r = Ring::make({"x0", "x1", "x2", "x3"});
    Polynomial quartic = P(r, "x0^2*x2^2 + x0*x3^3 - x1^2*x3^2");
    auto fm = factor_map(quartic);
    REQUIRE(fm.size() == 1);
    CHECK(fm.begin()->second == 1);
    CHECK(Polynomial::cmp(parse_poly(fm.begin()->first, r),
                          quartic.primitive()) == 0);

    RingPtr a = Ring::make({"x1", "x2", "x3"});
    Polynomial cusp = P(a, "x1^2*x3^2 - x2^2 - x3^3");
    auto fa = factor_map(cusp);
    REQUIRE(fa.size() == 1);
    CHECK(fa.begin()->second == 1);

    // A reducible quartic in the same ring.
    CHECK(factor_map(P(r, "x0^2*x2^2 - x1^2*x3^2")) ==
          FM{{"x0*x2 - x1*x3", 1}, {"x0*x2 + x1*x3", 1}});
}

TEST_CASE("factorization: constants and errors") {
    RingPtr r = Ring::make({"x", "y"});
    CHECK(squarefree_and_factor(P(r, "5")).empty());
    CHECK(squarefree_and_factor(P(r, "-7/3")).empty());
    CHECK_THROWS_AS(squarefree_and_factor(Polynomial(r)), structural_error);
}

TEST_CASE("factorization: reconstruction on random products") {
    RingPtr r = Ring::make({"x", "y"});
    std::vector<Polynomial> pool = {
        P(r, "x"),           P(r, "y"),         P(r, "x + y"),
        P(r, "x - y"),       P(r, "x + 1"),     P(r, "y - 2"),
        P(r, "x^2 + y^2"),   P(r, "x^2 + y + 1"), P(r, "x*y - 1"),
    };
    std::mt19937 rng(20240901);
    for (int run = 0; run < 25; ++run) {
        CAPTURE(run);
        int npick = 1 + static_cast<int>(rng() % 3);
        std::map<std::string, int> expected;
        Polynomial prod = Polynomial::constant(r, Rational(1));
        for (int i = 0; i < npick; ++i) {
            const Polynomial& g = pool[rng() % pool.size()];
            int mult = 1 + static_cast<int>(rng() % 2);
            expected[to_string(g)] += mult;
            for (int m = 0; m < mult; ++m) prod = prod * g;
        }
        // Random scalar content.
        int scale = 1 + static_cast<int>(rng() % 7);
        prod = prod.mul_scalar(rat_of(scale, 3));
        CHECK(factor_map(prod) == expected);

        // Re-factoring any irreducible factor returns it unchanged.
        for (const auto& [fs, mult] : expected) {
            (void)mult;
            Polynomial g = parse_poly(fs, r);
            CHECK(factor_map(g) == FM{{fs, 1}});
        }
    }
}

TEST_CASE("factorization: deterministic output") {
    RingPtr r = Ring::make({"x", "y"});
    Polynomial f = P(r, "x^5*y - x*y^5");
    auto a = squarefree_and_factor(f);
    auto b = squarefree_and_factor(f);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(to_string(a[i].factor) == to_string(b[i].factor));
        CHECK(a[i].multiplicity == b[i].multiplicity);
    }
    // Factors come out sorted under the structural order.
    for (size_t i = 1; i < a.size(); ++i)
        CHECK(Polynomial::cmp(a[i - 1].factor, a[i].factor) < 0);
}
