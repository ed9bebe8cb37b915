#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brace.hpp"
#include "substructure.hpp"

namespace skewbrace {

struct ClosureSeries {
    std::vector<ElemSet> chain;  // starts at B, descends
    bool stabilised = false;
    bool subideal = false;
    std::optional<int> defect;  // first index where the chain hits C
};

// chain[k+1] = ideal closure of C inside the brace chain[k]
ClosureSeries ideal_closure_series(const Brace& B, const ElemSet& C);

struct IndexReport {
    int additive_index = 0;
    int multiplicative_index = 0;
    std::optional<int> common_index;
    bool subideal = false;
    std::optional<int> defect;
};
IndexReport index_of(const Brace& B, const ElemSet& C);

struct IdealiserReport {
    std::vector<ElemSet> admitting;  // subbraces N with S an ideal of N
    bool has_maximum = false;
    std::optional<ElemSet> idealiser;
    // two maximal admitting subbraces whose join is not admitting
    std::optional<std::pair<ElemSet, ElemSet>> obstruction;
};
IdealiserReport idealiser_report(const Brace& B, const ElemSet& S);

struct NormaliserReport {
    SubSet normaliser;
    bool contains_subbrace = false;
};
// largest strong left ideal whose every element normalises C additively
// and multiplicatively and fixes C under the action
NormaliserReport strong_left_normaliser(const Brace& B, const ElemSet& C);

struct SubidealEntry {
    ElemSet subbrace;
    bool subideal = false;
    std::optional<int> defect;
};

struct SubidealAudit {
    std::vector<SubidealEntry> entries;
    bool all_subideal = false;
    std::optional<int> nilpotency;
    bool soluble = false;
};
SubidealAudit subideal_audit(const Brace& B);

}  // namespace skewbrace
