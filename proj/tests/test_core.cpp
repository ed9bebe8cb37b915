#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/construct.hpp"

using namespace skewbrace;
using testhelp::load_fixture;

TEST_CASE("element set ordering is size first, then lexicographic") {
    ElemSet a = testhelp::make_set(8, {0, 3});
    ElemSet b = testhelp::make_set(8, {1, 2, 4});
    ElemSet c = testhelp::make_set(8, {0, 5});
    CHECK(a.before(b));
    CHECK(a.before(c));
    CHECK(!c.before(a));
    CHECK(!a.before(a));
    CHECK(a.subset_of(testhelp::make_set(8, {0, 3, 7})));
    CHECK(!b.subset_of(a));
}

TEST_CASE("validation accepts a trivial brace and rejects corrupted tables") {
    Table cyc = groups_of_order(5)[0];
    Brace T = validate_brace(5, cyc, cyc);
    CHECK(is_trivial(T));
    CHECK(T.order() == 5);

    Table broken = cyc;
    broken[1][2] = broken[1][3];  // duplicate entry, row no longer a bijection
    CHECK_THROWS_AS(validate_brace(5, broken, cyc), NotAGroup);
    CHECK_THROWS_AS(validate_brace(5, cyc, broken), NotAGroup);

    // relabel so the additive identity is no longer 0
    Table shifted(5, std::vector<int>(5));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            shifted[a][b] = (cyc[(a + 1) % 5][(b + 1) % 5] + 4) % 5;
    CHECK_THROWS_AS(validate_brace(5, shifted, shifted), IdentityMismatch);
}

TEST_CASE("mismatched group pair fails the distributive law") {
    // cyclic addition against a symmetric-group multiplication in a
    // labelling where the twisted distributive law breaks at (1,1,1)
    Table c6(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) c6[a][b] = (a + b) % 6;
    Table s3 = {{0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
                {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0}};
    CHECK_THROWS_AS(validate_brace(6, c6, s3), DistributivityFailure);
}

TEST_CASE("lambda maps agree with the defining relation") {
    Brace B = load_fixture("b16");
    for (int a = 0; a < 16; ++a) {
        CHECK(B.lambda(a, 0) == 0);
        for (int b = 0; b < 16; ++b) {
            CHECK(B.lambda(a, b) == B.add(B.neg(a), B.mul(a, b)));
            CHECK(B.star(a, b) == B.add(B.lambda(a, b), B.neg(b)));
            CHECK(B.mul(a, b) == B.add(B.add(a, B.star(a, b)), b));
        }
    }
}

TEST_CASE("identity audit passes exhaustively on every fixture") {
    for (const char* id : {"b16", "b24", "b32a", "b32b", "b32c"}) {
        Brace B = load_fixture(id);
        auto audit = identity_audit(B);
        CHECK(audit.pass);
        CHECK(audit.triples_checked ==
              (long)B.order() * B.order() * B.order());
        CHECK(!audit.witness.has_value());
    }
}

TEST_CASE("fixtures are genuinely non-trivial braces") {
    for (const char* id : {"b16", "b24", "b32a", "b32b", "b32c"})
        CHECK(!is_trivial(load_fixture(id)));
}

TEST_CASE("star vanishes exactly on the trivial brace") {
    Brace S3 = testhelp::s3_trivial();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(S3.star(a, b) == 0);
}
