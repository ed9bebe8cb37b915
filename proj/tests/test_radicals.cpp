#include <doctest.h>

#include "helpers.hpp"
#include "skewbrace/radicals.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/substructure.hpp"

using namespace skewbrace;
using testhelp::load_fixture;
using testhelp::make_set;

TEST_CASE("distinguished ideals of the nilpotent fixture") {
    Brace B = load_fixture("b16");
    CHECK(distinguished_ideal(B, Distinguished::Centre).bits ==
          make_set(16, {0, 10}));
    CHECK(distinguished_ideal(B, Distinguished::Socle).bits ==
          make_set(16, {0, 10}));
    CHECK(distinguished_ideal(B, Distinguished::Fix).bits ==
          make_set(16, {0, 2, 8, 10}));
    CHECK(distinguished_ideal(B, Distinguished::KernelLambda).bits ==
          make_set(16, {0, 10}));
}

TEST_CASE("Fitting and Frattini ideals across the fixtures") {
    Brace b16 = load_fixture("b16");
    CHECK(fitting_ideal(b16).bits == ElemSet::full(16));
    CHECK(frattini_ideal(b16).bits == make_set(16, {0, 2, 8, 10}));

    Brace b24 = load_fixture("b24");
    CHECK(fitting_ideal(b24).bits == make_set(24, {0, 4, 8}));
    CHECK(frattini_ideal(b24).bits.count() == 1);

    Brace b32c = load_fixture("b32c");
    CHECK(fitting_ideal(b32c).bits.count() == 1);
}

TEST_CASE("chief centraliser route reproduces the Fitting ideal") {
    for (const char* id : {"b16", "b24", "b32a", "b32b", "b32c"}) {
        Brace B = load_fixture(id);
        CHECK(zeta_b_radical(B).bits == fitting_ideal(B).bits);
    }
}

TEST_CASE("non-generators coincide with the Frattini ideal when nilpotent") {
    Brace B = load_fixture("b16");
    CHECK(non_generators(B) == frattini_ideal(B).bits);
}

TEST_CASE("centraliser is the largest ideal commuting into the target") {
    Brace B = load_fixture("b32a");
    ElemSet fit = fitting_ideal(B).bits;
    ElemSet c = centraliser(B, fit).bits;
    CHECK(c == make_set(32, {0, 16}));
    // modulo target must sit inside the ideal being centralised
    CHECK_THROWS_AS(centraliser(B, make_set(32, {0, 16}), fit), NotNested);
}

TEST_CASE("Sylow decomposition verdicts per fixture") {
    CHECK(sylow(load_fixture("b16")).decomposes);
    auto rep = sylow(load_fixture("b24"));
    CHECK(!rep.decomposes);
    CHECK(!rep.failures.empty());
    for (const char* id : {"b32a", "b32b", "b32c"})
        CHECK(sylow(load_fixture(id)).decomposes);
}

TEST_CASE("single-prime query reports just that component") {
    auto rep = sylow(load_fixture("b24"), 3);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].prime == 3);
    CHECK(rep.components[0].elements.count() == 3);
}

TEST_CASE("element profiles expose common cyclic generators") {
    Brace T = trivial_brace(groups_of_order(7)[0]);
    auto rep = element_profiles(T);
    CHECK(rep.additive_cyclic);
    CHECK(rep.multiplicative_cyclic);
    REQUIRE(rep.common_generator.has_value());
    CHECK(*rep.common_generator != 0);
    for (const auto& p : rep.profiles) {
        CHECK(p.additive_order == (p.element == 0 ? 1 : 7));
        CHECK(p.additive_primes == p.multiplicative_primes);
    }
}

TEST_CASE("Gaschuetz identity on braces with vanishing Frattini ideal") {
    for (int n : {6, 8, 10, 12})
        for (const auto& X : enumerate_braces(n)) {
            auto g = gaschutz_check(X);
            if (g.applicable) CHECK(g.equal);
        }
}

TEST_CASE("maximal left ideals intersect the Fitting ideal in ideals") {
    Brace B = load_fixture("b24");
    ElemSet fit = fitting_ideal(B).bits;
    auto maxes = maximal_left_ideals(B);
    CHECK(!maxes.empty());
    for (const auto& L : maxes) {
        CHECK(L.is_left_ideal);
        CHECK(classify(B, L.bits & fit).is_ideal);
    }
}
