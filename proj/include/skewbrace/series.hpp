#pragma once

#include <optional>
#include <vector>

#include "brace.hpp"
#include "substructure.hpp"

namespace skewbrace {

enum class SeriesKind {
    UpperCentral,
    LowerCentral,
    Derived,
    Chief,
    BLower,
    BUpper,
    IdealClosure
};

struct ChiefFactor {
    int order = 0;
    bool central = false;  // factor sits inside the centre of the quotient
};

struct Series {
    SeriesKind kind;
    std::vector<SubSet> chain;
    bool stabilised = false;
    ElemSet terminal;
    // smallest index reaching the stable end when the series completes:
    // for central kinds this is the nilpotency class, for derived the
    // derived length, for B-central kinds the B-central class
    std::optional<int> length;
    std::vector<ChiefFactor> factors;  // chief series only
};

Series upper_central_series(const Brace& B);
Series lower_central_series(const Brace& B);

// I defaults to the whole brace
Series derived_series(const Brace& B, std::optional<ElemSet> I = std::nullopt);

// smallest n with zeta_n = B, cross-checked against the descending series
std::optional<int> nilpotency_class(const Brace& B);

// Maximal chain of ideals of B.  The minimal step is chosen
// deterministically; with reverse set, the choice flips to the other end
// of the deterministic order, giving an independent chain.
Series chief_series(const Brace& B, bool reverse = false);

Series b_central_series(const Brace& B, const ElemSet& I, bool upper);

struct BCentralReport {
    bool nilpotent = false;
    std::optional<int> cls;
    Series lower;
    Series upper;
};
// runs both directions and checks the verdicts agree
BCentralReport b_central_report(const Brace& B, const ElemSet& I);

// Upper central series of a bare group table, for comparing the brace
// series against both underlying groups.
std::vector<ElemSet> group_upper_central_series(const Table& t);

}  // namespace skewbrace
