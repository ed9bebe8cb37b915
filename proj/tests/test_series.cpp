#include <doctest.h>

#include "helpers.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/construct.hpp"
#include "skewbrace/substructure.hpp"

using namespace skewbrace;
using testhelp::load_fixture;
using testhelp::make_set;

TEST_CASE("central series of the nilpotent fixture reach class three") {
    Brace B = load_fixture("b16");
    auto cls = nilpotency_class(B);
    REQUIRE(cls.has_value());
    CHECK(*cls == 3);
    Series up = upper_central_series(B);
    Series lo = lower_central_series(B);
    CHECK(up.length == 3);
    CHECK(lo.length == 3);
    CHECK(up.terminal == ElemSet::full(16));
    CHECK(lo.terminal.count() == 1);
    CHECK(up.chain[1].bits == make_set(16, {0, 10}));  // the centre
    // ascending chain grows, descending chain shrinks
    for (size_t k = 0; k + 1 < up.chain.size(); ++k)
        CHECK(up.chain[k].bits.proper_subset_of(up.chain[k + 1].bits));
    for (size_t k = 0; k + 1 < lo.chain.size(); ++k)
        CHECK(lo.chain[k + 1].bits.proper_subset_of(lo.chain[k].bits));
}

TEST_CASE("insoluble fixture has no class and a stuck derived series") {
    Brace B = load_fixture("b32c");
    CHECK(!nilpotency_class(B).has_value());
    Series der = derived_series(B);
    CHECK(der.stabilised);
    CHECK(der.terminal.count() == 16);
}

TEST_CASE("trivial abelian brace is nilpotent of class one") {
    Brace T = trivial_brace(groups_of_order(7)[0]);
    CHECK(nilpotency_class(T) == 1);
    CHECK(derived_series(T).terminal.count() == 1);
}

TEST_CASE("chief series factors multiply to the brace order") {
    for (const char* id : {"b16", "b24", "b32b"}) {
        Brace B = load_fixture(id);
        for (bool rev : {false, true}) {
            Series chief = chief_series(B, rev);
            int prod = 1;
            for (const auto& f : chief.factors) prod *= f.order;
            CHECK(prod == B.order());
            // chain ascends through ideals of B
            for (size_t k = 0; k + 1 < chief.chain.size(); ++k)
                CHECK(chief.chain[k].bits.proper_subset_of(
                    chief.chain[k + 1].bits));
            for (const auto& s : chief.chain) CHECK(s.is_ideal);
        }
    }
}

TEST_CASE("relative central series agree on nilpotency and class") {
    Brace B = load_fixture("b32b");
    // the order-8 Fitting ideal is nilpotent relative to B
    auto rep = b_central_report(B, make_set(32, {0, 2, 4, 6, 16, 18, 20, 22}));
    CHECK(rep.nilpotent);
    CHECK(rep.lower.stabilised);
    CHECK(rep.upper.stabilised);
    CHECK(rep.lower.length == rep.upper.length);
    // the whole brace is not
    auto whole = b_central_report(B, ElemSet::full(32));
    CHECK(!whole.nilpotent);
}

TEST_CASE("whole-brace relative class equals the ordinary class") {
    Brace B = load_fixture("b16");
    auto rep = b_central_report(B, ElemSet::full(16));
    CHECK(rep.nilpotent);
    CHECK(rep.cls == nilpotency_class(B));
}

TEST_CASE("group central series dominate the brace series") {
    Brace B = load_fixture("b16");
    auto zadd = group_upper_central_series(B.add_table());
    auto zmul = group_upper_central_series(B.mul_table());
    Series up = upper_central_series(B);
    for (size_t k = 0; k < up.chain.size(); ++k) {
        const ElemSet& za = zadd[std::min(k, zadd.size() - 1)];
        const ElemSet& zm = zmul[std::min(k, zmul.size() - 1)];
        CHECK(up.chain[k].bits.subset_of(za));
        CHECK(up.chain[k].bits.subset_of(zm));
    }
}
