#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fixture_util.hpp"
#include "wstrat/decomposition.hpp"
#include "wstrat/engine.hpp"
#include "wstrat/factor.hpp"

using namespace wstrat;
using namespace wtest;

namespace {

// Multiset of canonical reduced-basis strings, one entry per ideal: a unique
// representation of a set of ideals regardless of generator presentation.
std::multiset<std::string> ideal_set(const std::vector<Ideal>& ideals) {
    std::multiset<std::string> out;
    for (const Ideal& I : ideals) out.insert(joined(canon_strings(I)));
    return out;
}

std::multiset<std::string> ideal_set(const json& arr, const RingPtr& ring) {
    std::multiset<std::string> out;
    for (const auto& gens : arr)
        out.insert(joined(canon_strings(ideal_from(gens, ring))));
    return out;
}

void check_valid(const Decomposition& D) {
    std::vector<Ideal> parts;
    for (const PrimaryComponent& c : D.components) {
        // component inside its prime, prime = radical of component
        CHECK(ideal_contains(c.associated_prime, c.component));
        CHECK(ideal_eq(radical(c.component), c.associated_prime));
        parts.push_back(c.component);
    }
    CHECK(ideal_eq(intersect_many(D.input.ring(), parts), D.input));
}

}  // namespace

TEST_CASE("associated primes across the kernel battery") {
    json battery = load_fixture("kernel_battery.json");
    for (const auto& item : battery["items"]) {
        std::string name = item["name"].get<std::string>();
        CAPTURE(name);
        RingPtr r = ring_from(item["vars"]);
        Ideal I = ideal_from(item["gens"], r);
        Decomposition D = primary_decomposition(I);
        check_valid(D);
        std::vector<Ideal> ass;
        for (const PrimaryComponent& c : D.components)
            ass.push_back(c.associated_prime);
        CHECK(ideal_set(ass) == ideal_set(item["ass_primes"], r));
        // every minimal prime is an associated prime
        for (const Ideal& P : minimal_primes(I)) {
            bool hit = false;
            for (const Ideal& A : ass)
                if (ideal_eq(P, A)) hit = true;
            CHECK(hit);
        }
    }
}

TEST_CASE("minimal primes of split, prime, and singular-locus ideals") {
    RingPtr r = Ring::make({"x0", "x1", "x2", "x3"});

    SUBCASE("product generator splits into its factors") {
        Ideal I(r, {parse_poly("x1^2*(x0 - x2)", r)});
        auto got = ideal_set(minimal_primes(I));
        std::multiset<std::string> want{
            joined(canon_strings(Ideal(r, {parse_poly("x1", r)}))),
            joined(canon_strings(Ideal(r, {parse_poly("x0 - x2", r)})))};
        CHECK(got == want);
    }

    SUBCASE("prime input returns itself") {
        Ideal P(r, polys_from(json::parse(R"(["x2","x3"])"), r));
        std::vector<Ideal> ps = minimal_primes(P);
        REQUIRE(ps.size() == 1);
        CHECK(ideal_eq(ps[0], P));
    }

    SUBCASE("singular locus of the quartic with a cuspidal edge") {
        Polynomial f = parse_poly("x0^2*x2^2 + x0*x3^3 - x1^2*x3^2", r);
        std::vector<Polynomial> gens{f};
        for (int v = 0; v < 4; ++v) gens.push_back(f.derivative(v));
        auto got = ideal_set(minimal_primes(Ideal(r, gens)));
        std::multiset<std::string> want{
            joined(canon_strings(ideal_from(json::parse(R"(["x0","x3"])"), r))),
            joined(canon_strings(ideal_from(json::parse(R"(["x2","x3"])"), r)))};
        CHECK(got == want);
    }

    SUBCASE("unit ideal has no primes") {
        CHECK(minimal_primes(Ideal(r, {parse_poly("1", r)})).empty());
        Ideal U(r, {parse_poly("x0", r), parse_poly("x0 + 1", r)});
        CHECK(minimal_primes(U).empty());
    }

    SUBCASE("zero ideal is its own unique prime") {
        std::vector<Ideal> ps = minimal_primes(Ideal(r, {}));
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].gens().empty());
    }
}

TEST_CASE("primary decomposition basics") {
    RingPtr r = Ring::make({"x", "y"});

    SUBCASE("line with an embedded point") {
        Ideal I(r, {parse_poly("x^2", r), parse_poly("x*y", r)});
        Decomposition D = primary_decomposition(I);
        check_valid(D);
        std::vector<Ideal> ass;
        for (const PrimaryComponent& c : D.components)
            ass.push_back(c.associated_prime);
        std::multiset<std::string> want{
            joined(canon_strings(Ideal(r, {parse_poly("x", r)}))),
            joined(canon_strings(
                Ideal(r, {parse_poly("x", r), parse_poly("y", r)})))};
        CHECK(ideal_set(ass) == want);
    }

    SUBCASE("prime input gives a single component equal to itself") {
        Ideal P(r, {parse_poly("y - x^2", r)});
        Decomposition D = primary_decomposition(P);
        REQUIRE(D.components.size() == 1);
        CHECK(ideal_eq(D.components[0].component, P));
        CHECK(ideal_eq(D.components[0].associated_prime, P));
    }

    SUBCASE("unit ideal is rejected") {
        CHECK_THROWS_AS(
            primary_decomposition(Ideal(r, {parse_poly("1", r)})),
            structural_error);
        Ideal U(r, {parse_poly("x", r), parse_poly("x + 1", r)});
        CHECK_THROWS_AS(primary_decomposition(U), structural_error);
    }

    SUBCASE("zero ideal decomposes as itself") {
        Decomposition D = primary_decomposition(Ideal(r, {}));
        REQUIRE(D.components.size() == 1);
        CHECK(D.components[0].component.gens().empty());
        CHECK(D.components[0].associated_prime.gens().empty());
    }
}

TEST_CASE("radical") {
    RingPtr r = Ring::make({"x0", "x1", "x2", "x3"});

    CHECK(joined(canon_strings(radical(Ideal(r, {parse_poly("x1^2", r)})))) ==
          joined(canon_strings(Ideal(r, {parse_poly("x1", r)}))));

    CHECK(joined(canon_strings(
              radical(Ideal(r, {parse_poly("x1^2*(x0 - x2)", r)})))) ==
          joined(canon_strings(
              Ideal(r, {parse_poly("x0*x1 - x1*x2", r)}))));

    Ideal P(r, {parse_poly("x2", r), parse_poly("x3", r)});
    CHECK(ideal_eq(radical(P), P));

    CHECK(radical(Ideal(r, {})).gens().empty());
}

TEST_CASE("pure-dimensional part in projective space") {
    RingPtr r = Ring::make({"x0", "x1", "x2", "x3"});
    ProjectiveContext ctx = ProjectiveContext::all_blocks(r);

    Ideal two_lines(r, {parse_poly("x3", r), parse_poly("x0*x2", r)});
    CHECK(ideal_eq(pure_d(two_lines, 1, ctx), two_lines));
    CHECK(pure_d(two_lines, 0, ctx).is_unit());

    Ideal line(r, {parse_poly("x2", r), parse_poly("x3", r)});
    Ideal point(r, {parse_poly("x0", r), parse_poly("x1", r),
                    parse_poly("x2", r)});
    Ideal both = intersect(line, point);
    CHECK(ideal_eq(pure_d(both, 1, ctx), line));
    CHECK(ideal_eq(pure_d(both, 0, ctx), point));
}

TEST_CASE("discarding components with empty projective support") {
    RingPtr r = Ring::make({"x0", "x1", "x2", "x3"});
    ProjectiveContext ctx = ProjectiveContext::all_blocks(r);

    Ideal line(r, {parse_poly("x2", r), parse_poly("x3", r)});
    Ideal irrelevant(r, {parse_poly("x0", r), parse_poly("x1", r),
                         parse_poly("x2", r), parse_poly("x3", r)});

    SUBCASE("irrelevant-supported component is removed") {
        Decomposition D;
        D.input = intersect(line, irrelevant);
        D.components.push_back({line, line});
        D.components.push_back({irrelevant, irrelevant});
        Decomposition kept = discard_irrelevant(D, ctx);
        REQUIRE(kept.components.size() == 1);
        CHECK(ideal_eq(kept.components[0].associated_prime, line));
    }

    SUBCASE("decomposition of a nonempty prime is unchanged") {
        Decomposition D = primary_decomposition(line);
        Decomposition kept = discard_irrelevant(D, ctx);
        REQUIRE(kept.components.size() == 1);
        CHECK(ideal_eq(kept.components[0].associated_prime, line));
    }
}

TEST_CASE("conormal-plus-singular-line ideal of the cuspidal quartic") {
    // Full decomposition of the quartic's conormal ideal restricted over its
    // singular line, in P^3 x (P^3)*: nine associated primes, five supported
    // on the irrelevant locus, and the survivors projecting onto the singular
    // line (twice) and two points on it.
    json con = load_fixture("conormal.json");
    json item;
    for (const auto& it : con["items"])
        if (it["name"] == "whitney-cusp") item = it;
    RingPtr base = ring_from(item["vars"]);
    std::vector<std::string> duals;
    for (const auto& d : item["dual_vars"]) duals.push_back(d.get<std::string>());
    RingPtr r = base->extended(duals, "dual");
    std::vector<Polynomial> gens = polys_from(item["conormal"], r);
    gens.push_back(parse_poly("x2", r));
    gens.push_back(parse_poly("x3", r));

    Decomposition D = primary_decomposition(Ideal(r, gens));
    check_valid(D);
    CHECK(D.components.size() == 9);

    ProjectiveContext ctx = ProjectiveContext::all_blocks(r);
    Decomposition kept = discard_irrelevant(D, ctx);
    REQUIRE(kept.components.size() == 4);

    json dec = load_fixture("decompose.json");
    json want;
    for (const auto& it : dec["items"])
        if (it["name"] == "cusp-singular-line") want = it;
    std::multiset<std::string> want_proj;
    for (const auto& p : want["projections"])
        want_proj.insert(joined(canon_strings(ideal_from(p, base))));
    std::multiset<std::string> got_proj;
    for (const PrimaryComponent& c : kept.components)
        got_proj.insert(
            joined(canon_strings(eliminate(c.associated_prime, duals))));
    CHECK(got_proj == want_proj);
}

TEST_CASE("associated primes are stable under generator shuffling") {
    json battery = load_fixture("kernel_battery.json");
    std::mt19937 rng(424242);
    for (const auto& item : battery["items"]) {
        std::string name = item["name"].get<std::string>();
        if (name.rfind("B03", 0) != 0 && name.rfind("B05", 0) != 0 &&
            name.rfind("B08", 0) != 0)
            continue;
        CAPTURE(name);
        RingPtr r = ring_from(item["vars"]);
        std::vector<Polynomial> gens = polys_from(item["gens"], r);
        auto base = ideal_set(associated_primes(Ideal(r, gens)));
        for (int round = 0; round < 2; ++round) {
            std::shuffle(gens.begin(), gens.end(), rng);
            std::vector<Polynomial> scaled;
            for (const Polynomial& g : gens)
                scaled.push_back(g.mul_scalar(rat_of(2 + round, 3)));
            CHECK(ideal_set(associated_primes(Ideal(r, scaled))) == base);
        }
    }
}

TEST_CASE("repeated runs give identical output") {
    json battery = load_fixture("kernel_battery.json");
    for (const auto& item : battery["items"]) {
        std::string name = item["name"].get<std::string>();
        if (name.rfind("B08", 0) != 0) continue;
        RingPtr r = ring_from(item["vars"]);
        Ideal I = ideal_from(item["gens"], r);
        Decomposition a = primary_decomposition(I);
        Decomposition b = primary_decomposition(I);
        REQUIRE(a.components.size() == b.components.size());
        for (size_t i = 0; i < a.components.size(); ++i) {
            CHECK(joined(canon_strings(a.components[i].component)) ==
                  joined(canon_strings(b.components[i].component)));
            CHECK(joined(canon_strings(a.components[i].associated_prime)) ==
                  joined(canon_strings(b.components[i].associated_prime)));
        }
        // output arrives sorted by associated prime
        for (size_t i = 1; i < a.components.size(); ++i)
            CHECK(Ideal::cmp(a.components[i - 1].associated_prime,
                             a.components[i].associated_prime) < 0);
    }
}
