#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "helpers.hpp"
#include "skewbrace/construct.hpp"
#include "skewbrace/substructure.hpp"

using namespace skewbrace;
using testhelp::load_fixture;
using testhelp::make_set;

TEST_CASE("group catalogue has the expected sizes") {
    const int counts[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
    for (int n = 1; n <= 15; ++n) {
        auto gs = groups_of_order(n);
        CHECK((int)gs.size() == counts[n - 1]);
        for (const auto& t : gs) check_group_table(n, t, "catalogue");
    }
    CHECK_THROWS_AS(groups_of_order(100), OrderTooLarge);
}

TEST_CASE("automorphism group sizes of small groups") {
    auto count_aut = [](const Table& t) {
        return (int)automorphism_group(t).size();
    };
    // cyclic of order 8 -> 4, elementary abelian of order 8 -> 168,
    // quaternion -> 24, dihedral -> 8, C4 x C2 -> 8
    std::vector<int> sizes;
    for (const auto& t : groups_of_order(8)) sizes.push_back(count_aut(t));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{4, 8, 8, 24, 168});
    for (const auto& t : groups_of_order(6)) {
        int a = count_aut(t);
        CHECK((a == 2 || a == 6));  // C6 -> 2, S3 -> 6
    }
}

TEST_CASE("relabelling a brace produces an isomorphic brace") {
    Brace B = load_fixture("b16");
    // fixed permutation of the labels keeping 0 in place
    std::vector<int> p(16);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[3], p[11]);
    std::swap(p[5], p[14]);
    std::swap(p[1], p[7]);
    Table add(16, std::vector<int>(16)), mul(16, std::vector<int>(16));
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            add[p[a]][p[b]] = p[B.add(a, b)];
            mul[p[a]][p[b]] = p[B.mul(a, b)];
        }
    Brace C = validate_brace(16, add, mul);
    auto cert = is_isomorphic(B, C);
    REQUIRE(cert.isomorphic);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            CHECK(cert.forward[B.add(a, b)] == C.add(cert.forward[a], cert.forward[b]));
            CHECK(cert.forward[B.mul(a, b)] == C.mul(cert.forward[a], cert.forward[b]));
        }
}

TEST_CASE("braces sharing both group types need not be isomorphic") {
    Brace a = load_fixture("b32a");
    Brace b = load_fixture("b32b");
    CHECK(!is_isomorphic(a, b).isomorphic);
    CHECK(is_isomorphic(a, a).isomorphic);
}

TEST_CASE("cocycle construction rejects corrupted data") {
    CocycleSpec good = load_cocycle_file(testhelp::fixtures_dir() +
                                         "/b16.cocycle.json");
    from_cocycle(good);  // sanity

    CocycleSpec bad = good;
    bad.delta[3] = bad.delta[4];
    CHECK_THROWS_AS(from_cocycle(bad), DeltaNotBijective);

    bad = good;
    std::swap(bad.delta[1], bad.delta[2]);
    CHECK_THROWS_AS(from_cocycle(bad), BraceError);

    bad = good;
    bad.action[1] = bad.action[2];
    CHECK_THROWS_AS(from_cocycle(bad), BraceError);
}

TEST_CASE("holomorph subgroups must be regular permutation groups") {
    Table c4 = groups_of_order(4)[0];
    bool cyclic = false;
    for (int a = 0; a < 4; ++a) {
        int k = 1, x = a;
        while (x != 0) {
            x = c4[x][a];
            ++k;
        }
        cyclic |= k == 4;
    }
    REQUIRE(cyclic);
    std::vector<int> id = {0, 1, 2, 3};
    // pure translations: the trivial brace
    std::vector<HolElement> translations;
    for (int t = 0; t < 4; ++t) translations.push_back({id, t});
    Brace T = from_regular_subgroup(c4, translations);
    CHECK(is_trivial(T));

    // dropping an element breaks regularity
    std::vector<HolElement> partial(translations.begin(),
                                    translations.end() - 1);
    CHECK_THROWS_AS(from_regular_subgroup(c4, partial), NotRegular);

    // doubling the identity breaks regularity at the translation level
    std::vector<HolElement> doubled = translations;
    doubled[3] = translations[0];
    CHECK_THROWS_AS(from_regular_subgroup(c4, doubled), BraceError);

    // a non-permutation component is rejected outright
    std::vector<HolElement> mangled = translations;
    mangled[2].aut = {0, 0, 2, 3};
    CHECK_THROWS_AS(from_regular_subgroup(c4, mangled), NotASubgroup);
}

TEST_CASE("direct products multiply orders and stay valid") {
    Brace A = trivial_brace(groups_of_order(2)[0]);
    Brace B = load_fixture("b16");
    Brace P = direct_product(A, B);
    CHECK(P.order() == 32);
    CHECK(identity_audit(P).pass);
}

TEST_CASE("quotients demand ideals and restrictions demand subbraces") {
    Brace B = load_fixture("b32a");
    ElemSet S = make_set(32, {0, 20});  // subbrace, not an ideal
    CHECK_THROWS_AS(quotient(B, S), NotAnIdeal);
    CHECK_THROWS_AS(restrict_to(B, make_set(32, {0, 1, 2})), NotASubbrace);

    ElemSet I = make_set(32, {0, 4, 16, 20});
    auto q = quotient(B, I);
    CHECK(q.brace.order() == 8);
    for (int a = 0; a < 32; ++a)
        for (int b = 0; b < 32; ++b) {
            CHECK(q.projection[B.add(a, b)] ==
                  q.brace.add(q.projection[a], q.projection[b]));
            CHECK(q.projection[B.mul(a, b)] ==
                  q.brace.mul(q.projection[a], q.projection[b]));
        }
}

TEST_CASE("enumeration counts match the catalogue of small braces") {
    const int counts[] = {1, 1, 1, 4, 1, 6, 1, 47, 4, 6};
    for (int n = 1; n <= 10; ++n)
        CHECK((int)enumerate_braces(n).size() == counts[n - 1]);
}

TEST_CASE("enumeration bound is environment controlled") {
    CHECK(enumeration_bound() >= 12);
    CHECK_THROWS_AS(enumerate_braces(enumeration_bound() + 1), OrderTooLarge);
}
