#pragma once
#include "brace.hpp"

namespace skewbrace {

enum class Kind { Subbrace, LeftIdeal, StrongLeftIdeal, Ideal };

struct SubSet {
    ElemSet bits;
    bool is_subbrace = false;
    bool is_left_ideal = false;
    bool is_strong_left_ideal = false;
    bool is_ideal = false;

    bool has(Kind k) const {
        switch (k) {
            case Kind::Subbrace: return is_subbrace;
            case Kind::LeftIdeal: return is_left_ideal;
            case Kind::StrongLeftIdeal: return is_strong_left_ideal;
            case Kind::Ideal: return is_ideal;
        }
        return false;
    }
};

// decides all four flags by exhaustion; a set without 0 or not closed
// simply gets all flags false
SubSet classify(const Brace& B, const ElemSet& bits);

ElemSet subbrace_closure(const Brace& B, const ElemSet& seed);
ElemSet ideal_closure(const Brace& B, const ElemSet& seed);
// additive subgroup generated by seed
ElemSet additive_closure(const Brace& B, const ElemSet& seed);

// complete lattice of the requested kind, sorted by (size, bit pattern)
std::vector<SubSet> all_substructures(const Brace& B, Kind kind);
// all additive subgroups (plumbing for the lattice search)
std::vector<ElemSet> all_additive_subgroups(const Brace& B);

std::vector<SubSet> extremal(const Brace& B, Kind kind, bool maximal);

// largest ideal of B contained in the subbrace C
SubSet core_of(const Brace& B, const ElemSet& C);

// I + J = IJ for ideals; asserts the two coincide
SubSet sum_and_product(const Brace& B, const ElemSet& I, const ElemSet& J);

// distinguished element sets (classification left to radicals)
ElemSet socle_set(const Brace& B);
ElemSet fix_set(const Brace& B);
ElemSet centre_set(const Brace& B);
ElemSet kernel_lambda_set(const Brace& B);

}  // namespace skewbrace
