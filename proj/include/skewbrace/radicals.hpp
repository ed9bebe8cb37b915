#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brace.hpp"
#include "construct.hpp"
#include "substructure.hpp"

namespace skewbrace {

enum class Distinguished { Socle, Fix, Centre, KernelLambda };

// socle and centre come back as ideals, fix as a left ideal; the
// classification is checked, not assumed
SubSet distinguished_ideal(const Brace& B, Distinguished which);

// sum of all ideals whose B-central series terminates
SubSet fitting_ideal(const Brace& B);

std::vector<SubSet> maximal_left_ideals(const Brace& B);

// intersection of the maximal left ideals, cut down to the Fitting ideal
SubSet frattini_ideal(const Brace& B);

// elements that can be dropped from any generating set
ElemSet non_generators(const Brace& B);

// largest ideal K with commutator_ideal(K, I) inside modulo ({0} default)
SubSet centraliser(const Brace& B, const ElemSet& I,
                   std::optional<ElemSet> modulo = std::nullopt);

// intersection of the chief-factor centralisers; recomputed over a second
// chief series and checked chain-independent
SubSet zeta_b_radical(const Brace& B);

struct GaschutzReport {
    bool applicable = false;  // only when the Frattini ideal vanishes
    ElemSet fitting;
    ElemSet abelian_minimal_sum;
    bool equal = false;
};
GaschutzReport gaschutz_check(const Brace& B);

struct SylowComponent {
    int prime = 0;
    ElemSet elements;  // elements of prime-power order
    bool additive_subgroup = false;
    bool multiplicative_subgroup = false;
    bool same_set = false;
    bool ideal = false;
};

struct SylowReport {
    bool decomposes = false;
    std::vector<SylowComponent> components;
    IsoCertificate certificate;  // B against the product of the components
    std::vector<std::string> failures;
};
SylowReport sylow(const Brace& B, std::optional<int> p = std::nullopt);

struct ElementProfile {
    int element = 0;
    int additive_order = 0;
    int multiplicative_order = 0;
    int subbrace_order = 0;
    std::vector<int> additive_primes;
    std::vector<int> multiplicative_primes;
    std::vector<int> subbrace_primes;
};

struct ProfileReport {
    std::vector<ElementProfile> profiles;
    bool additive_cyclic = false;
    bool multiplicative_cyclic = false;
    std::optional<int> common_generator;  // generates both groups
};
ProfileReport element_profiles(const Brace& B);

}  // namespace skewbrace
