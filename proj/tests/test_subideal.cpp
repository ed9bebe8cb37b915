#include <doctest.h>

#include "helpers.hpp"
#include "skewbrace/subideal.hpp"
#include "skewbrace/substructure.hpp"

using namespace skewbrace;
using testhelp::load_fixture;
using testhelp::make_set;

TEST_CASE("order-two subbraces of the trivial symmetric brace are not "
          "subideal") {
    Brace S3 = testhelp::s3_trivial();
    int order2 = 0, subideal2 = 0;
    for (const auto& S : all_substructures(S3, Kind::Subbrace)) {
        if (S.bits.count() != 2) continue;
        ++order2;
        auto series = ideal_closure_series(S3, S.bits);
        subideal2 += series.subideal;
        CHECK(series.stabilised);
        // closure of a reflection already generates everything
        CHECK(series.chain.back() == ElemSet::full(6));
    }
    CHECK(order2 == 3);
    CHECK(subideal2 == 0);
    CHECK(!subideal_audit(S3).all_subideal);
}

TEST_CASE("ideals are subideals of defect at most one") {
    Brace B = load_fixture("b32b");
    for (const auto& I : all_substructures(B, Kind::Ideal)) {
        auto series = ideal_closure_series(B, I.bits);
        CHECK(series.subideal);
        CHECK(series.defect <= 1);
    }
}

TEST_CASE("iterated closure finds the depth-two subideal") {
    Brace B = load_fixture("b24");
    ElemSet soc6 = make_set(24, {0, 4, 8, 12, 16, 20});
    auto series = ideal_closure_series(B, soc6);
    CHECK(series.subideal);
    CHECK(series.defect == 2);
    REQUIRE(series.chain.size() >= 3);
    CHECK(series.chain[0] == ElemSet::full(24));
    CHECK(series.chain[1] ==
          make_set(24, {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22}));
    CHECK(series.chain[2] == soc6);
}

TEST_CASE("indices follow Lagrange in both groups") {
    Brace B = load_fixture("b24");
    auto rep = index_of(B, make_set(24, {0, 4, 8, 12, 16, 20}));
    CHECK(rep.additive_index == 4);
    CHECK(rep.multiplicative_index == 4);
    CHECK(rep.common_index == 4);
    CHECK(rep.subideal);
}

TEST_CASE("idealiser is the whole brace for an ideal") {
    Brace B = load_fixture("b32b");
    auto rep = idealiser_report(B, make_set(32, {0, 2, 4, 6, 16, 18, 20, 22}));
    CHECK(rep.has_maximum);
    REQUIRE(rep.idealiser.has_value());
    CHECK(*rep.idealiser == ElemSet::full(32));
}

TEST_CASE("idealiser can fail to exist") {
    Brace B = load_fixture("b32a");
    auto rep = idealiser_report(B, make_set(32, {0, 20}));
    CHECK(!rep.has_maximum);
    CHECK(!rep.idealiser.has_value());
    REQUIRE(rep.obstruction.has_value());
    // both obstruction members admit the set, their join does not
    auto admitted = [&](const ElemSet& N) {
        for (const auto& A : rep.admitting)
            if (A == N) return true;
        return false;
    };
    CHECK(admitted(rep.obstruction->first));
    CHECK(admitted(rep.obstruction->second));
    CHECK(!admitted(subbrace_closure(B, rep.obstruction->first |
                                            rep.obstruction->second)));
}

TEST_CASE("strong left normaliser of an ideal is everything") {
    Brace B = load_fixture("b16");
    auto rep = strong_left_normaliser(B, make_set(16, {0, 2, 8, 10}));
    CHECK(rep.normaliser.bits == ElemSet::full(16));
    CHECK(rep.contains_subbrace);
}

TEST_CASE("audit covers every subbrace exactly once") {
    Brace B = load_fixture("b16");
    auto audit = subideal_audit(B);
    CHECK(audit.entries.size() ==
          all_substructures(B, Kind::Subbrace).size());
    CHECK(audit.all_subideal);
    for (const auto& e : audit.entries) CHECK(e.subideal);
}
