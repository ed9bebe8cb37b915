#include <doctest.h>

#include "helpers.hpp"
#include "skewbrace/ybe.hpp"
#include "skewbrace/construct.hpp"

using namespace skewbrace;
using testhelp::load_fixture;

TEST_CASE("trivial abelian brace yields the flip") {
    Brace T = trivial_brace(groups_of_order(6)[0]);
    auto sol = solution_from_brace(T);
    CHECK(sol.braid);
    CHECK(sol.nondegenerate_left);
    CHECK(sol.nondegenerate_right);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            CHECK(sol.first[a][b] == b);
            CHECK(sol.second[a][b] == a);
        }
}

TEST_CASE("trivial non-abelian brace yields conjugation, not the flip") {
    Brace S3 = testhelp::s3_trivial();
    auto sol = solution_from_brace(S3);
    CHECK(sol.braid);
    CHECK(sol.nondegenerate_left);
    CHECK(sol.nondegenerate_right);
    // lambda is the identity, so r(a,b) = (b, b^-1 a b)
    bool conjugates = false;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            CHECK(sol.first[a][b] == b);
            CHECK(sol.second[a][b] == S3.mul(S3.inv(b), S3.mul(a, b)));
            conjugates |= sol.second[a][b] != a;
        }
    CHECK(conjugates);
}

TEST_CASE("fixtures produce non-degenerate braided solutions") {
    for (const char* id : {"b16", "b24", "b32a", "b32b", "b32c"}) {
        auto sol = solution_from_brace(load_fixture(id));
        CHECK(sol.braid);
        CHECK(sol.nondegenerate_left);
        CHECK(sol.nondegenerate_right);
        CHECK(check_braid(sol).holds);
    }
}

TEST_CASE("braid checker pinpoints a failing triple") {
    // r(a,b) = (b, a+b) on Z/4 is a bijection but no braided solution
    int n = 4;
    YBESolution fake;
    fake.n = n;
    fake.first.assign(n, std::vector<int>(n));
    fake.second.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            fake.first[a][b] = b;
            fake.second[a][b] = (a + b) % n;
        }
    auto verdict = check_braid(fake);
    CHECK(!verdict.holds);
    REQUIRE(verdict.witness.has_value());
    // the reported triple really is a counterexample
    int a = (*verdict.witness)[0];
    int b = (*verdict.witness)[1];
    int c = (*verdict.witness)[2];
    int x = fake.first[a][b], y = fake.second[a][b];
    int y2 = fake.first[y][c], z2 = fake.second[y][c];
    int x3 = fake.first[x][y2], y3 = fake.second[x][y2];
    int q = fake.first[b][c], s = fake.second[b][c];
    int p2 = fake.first[a][q], q2 = fake.second[a][q];
    int r3 = fake.first[q2][s], s3 = fake.second[q2][s];
    CHECK((x3 != p2 || y3 != r3 || z2 != s3));
}

TEST_CASE("solutions of all braces of order at most ten are braided") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& X : enumerate_braces(n)) {
            auto sol = solution_from_brace(X);
            CHECK(sol.braid);
            CHECK(sol.nondegenerate_left);
            CHECK(sol.nondegenerate_right);
        }
}
