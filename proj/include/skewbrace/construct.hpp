#pragma once
#include <utility>

#include "brace.hpp"
#include "substructure.hpp"

namespace skewbrace {

struct CocycleSpec {
    Table additive;               // (B,+)
    Table actor;                  // (C,.)
    Table action;                 // |C| x n, row c is lambda_c
    std::vector<int> delta;       // length |C|, bijective
    std::string name;
};

struct IsoCertificate {
    bool isomorphic = false;
    std::vector<int> forward;     // image of each element of B1 in B2
};

struct QuotientResult {
    Brace brace;
    std::vector<int> projection;  // element of B -> element of quotient
    std::vector<int> reps;        // quotient element -> smallest coset rep
};

struct RestrictResult {
    Brace brace;
    std::vector<int> elements;    // local index -> element of the parent
};

Brace trivial_brace(const Table& group, std::string name = "");

Brace from_cocycle(const CocycleSpec& spec);

// element of the holomorph: an additive automorphism plus a translation
struct HolElement {
    std::vector<int> aut;
    int trans;
    bool operator==(const HolElement&) const = default;
};

Brace from_regular_subgroup(const Table& add,
                            const std::vector<HolElement>& subgroup,
                            std::string name = "");

Brace direct_product(const Brace& B1, const Brace& B2);

QuotientResult quotient(const Brace& B, const ElemSet& I);

// standalone brace on a subbrace, elements relabelled in ascending order
RestrictResult restrict_to(const Brace& B, const ElemSet& S);

IsoCertificate is_isomorphic(const Brace& B1, const Brace& B2);

// all braces of order n via regular subgroups of the holomorph of each
// additive group; bound configurable through SKEWBRACE_ENUM_BOUND
std::vector<Brace> enumerate_braces(int n, bool up_to_iso = true);
int enumeration_bound();

// internal plumbing, exposed for tests: group tables of order n up to
// isomorphism, and the automorphism group of a table
std::vector<Table> groups_of_order(int n);
std::vector<std::vector<int>> automorphism_group(const Table& t);

}  // namespace skewbrace
