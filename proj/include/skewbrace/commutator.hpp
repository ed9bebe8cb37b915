#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brace.hpp"
#include "substructure.hpp"

namespace skewbrace {

// Additive subgroup generated by { x * y : x in X, y in Y }.
SubSet star_span(const Brace& B, const ElemSet& X, const ElemSet& Y);

// Additive subgroup generated by commutators -x - y + x + y, or by
// x^-1 y^-1 x y when multiplicative is set.
SubSet additive_commutator_span(const Brace& B, const ElemSet& X,
                                const ElemSet& Y, bool multiplicative = false);

// Smallest ideal containing every mixed commutator of I and J.  Computed
// twice from independent generating sets and cross-checked; symmetric and
// contained in I & J by construction.
SubSet commutator_ideal(const Brace& B, const ElemSet& I, const ElemSet& J);

struct StarSumReport {
    ElemSet sum;  // I*J + J*I + [I,J]_+ without ideal closure
    bool is_ideal = false;
    std::optional<int> witness;  // element forced in by closure when not
};
StarSumReport star_sum_is_ideal(const Brace& B, const ElemSet& I,
                                const ElemSet& J);

// Two-variable words over x, y with explicit grouping; evaluated strictly
// left to right, no operator precedence.
enum class Token { X, Y, Zero, Plus, Times, Neg, Inv, LParen, RParen };

struct PolynomialWord {
    std::vector<Token> tokens;
};

// nullopt if the token sequence does not parse
std::optional<int> evaluate_word(const Brace& B, const PolynomialWord& w,
                                 int x, int y);

// p(x,0) = 0 and p(0,y) = 0 over the whole brace
bool is_absorbing(const Brace& B, const PolynomialWord& w);

PolynomialWord canonical_additive_commutator();        // -x - y + x + y
PolynomialWord canonical_multiplicative_commutator();  // x^-1 y^-1 x y
PolynomialWord canonical_product_defect();             // xy - (x + y)

// absorbing word list reusable across substructure pairs; the canonical
// words come first
struct WordSample {
    std::vector<PolynomialWord> words;
    std::uint64_t words_generated = 0;
    std::uint64_t words_parsed = 0;
    std::uint64_t words_absorbing = 0;
};

WordSample sample_absorbing_words(const Brace& B, std::uint64_t samples,
                                  std::uint64_t seed);

ElemSet evaluate_words_over(const Brace& B,
                            const std::vector<PolynomialWord>& words,
                            const ElemSet& I, const ElemSet& J);

struct AbsorbingSample {
    ElemSet values;
    std::uint64_t words_generated = 0;
    std::uint64_t words_parsed = 0;
    std::uint64_t words_absorbing = 0;
};

// Random token sequences of bounded length, rejection-filtered through
// is_absorbing until the requested number of absorbing words has been
// evaluated over I x J; the three canonical words are always included.
AbsorbingSample sample_absorbing_values(const Brace& B, const ElemSet& I,
                                        const ElemSet& J,
                                        std::uint64_t samples,
                                        std::uint64_t seed);

}  // namespace skewbrace
