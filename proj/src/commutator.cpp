#include "skewbrace/commutator.hpp"

#include <random>

namespace skewbrace {

SubSet star_span(const Brace& B, const ElemSet& X, const ElemSet& Y) {
    ElemSet gen(B.order());
    gen.add(0);
    for (int x : X.indices())
        for (int y : Y.indices()) gen.add(B.star(x, y));
    return classify(B, additive_closure(B, gen));
}

SubSet additive_commutator_span(const Brace& B, const ElemSet& X,
                                const ElemSet& Y, bool multiplicative) {
    ElemSet gen(B.order());
    gen.add(0);
    for (int x : X.indices())
        for (int y : Y.indices()) {
            int c = multiplicative
                        ? B.mul(B.mul(B.inv(x), B.inv(y)), B.mul(x, y))
                        : B.add(B.add(B.neg(x), B.neg(y)), B.add(x, y));
            gen.add(c);
        }
    return classify(B, additive_closure(B, gen));
}

namespace {

// raw generators: [I,J]_+ and [I,J]_. and ij - (i + j)
ElemSet raw_commutator_set(const Brace& B, const ElemSet& I,
                           const ElemSet& J) {
    ElemSet gen(B.order());
    gen.add(0);
    for (int i : I.indices())
        for (int j : J.indices()) {
            gen.add(B.add(B.add(B.neg(i), B.neg(j)), B.add(i, j)));
            gen.add(B.mul(B.mul(B.inv(i), B.inv(j)), B.mul(i, j)));
            gen.add(B.add(B.mul(i, j), B.neg(B.add(i, j))));
        }
    return gen;
}

ElemSet star_sum_set(const Brace& B, const ElemSet& I, const ElemSet& J) {
    ElemSet gen = star_span(B, I, J).bits;
    gen = gen | star_span(B, J, I).bits;
    gen = gen | additive_commutator_span(B, I, J).bits;
    return additive_closure(B, gen);
}

}  // namespace

SubSet commutator_ideal(const Brace& B, const ElemSet& I, const ElemSet& J) {
    if (!classify(B, I).is_ideal || !classify(B, J).is_ideal)
        throw NotAnIdeal("commutator_ideal requires two ideals");
    ElemSet via_span = ideal_closure(B, star_sum_set(B, I, J));
    ElemSet via_raw = ideal_closure(B, raw_commutator_set(B, I, J));
    if (via_span != via_raw)
        throw BraceError("commutator routes disagree");
    ElemSet sym = ideal_closure(B, raw_commutator_set(B, J, I));
    if (sym != via_raw) throw BraceError("commutator is not symmetric");
    if (!via_raw.subset_of(I & J))
        throw BraceError("commutator escapes the intersection");
    return classify(B, via_raw);
}

StarSumReport star_sum_is_ideal(const Brace& B, const ElemSet& I,
                                const ElemSet& J) {
    StarSumReport r;
    r.sum = star_sum_set(B, I, J);
    r.is_ideal = classify(B, r.sum).is_ideal;
    if (!r.is_ideal) {
        ElemSet closed = ideal_closure(B, r.sum);
        for (int a : closed.indices())
            if (!r.sum.contains(a)) {
                r.witness = a;
                break;
            }
    }
    return r;
}

namespace {

// term := X | Y | Zero | Neg term | Inv term | ( expr )
// expr := term ((Plus | Times) term)*      left to right
std::optional<int> parse_expr(const Brace& B, const std::vector<Token>& w,
                              size_t& pos, int x, int y, int depth);

std::optional<int> parse_term(const Brace& B, const std::vector<Token>& w,
                              size_t& pos, int x, int y, int depth) {
    if (pos >= w.size() || depth > 64) return std::nullopt;
    Token t = w[pos++];
    switch (t) {
        case Token::X: return x;
        case Token::Y: return y;
        case Token::Zero: return 0;
        case Token::Neg: {
            auto v = parse_term(B, w, pos, x, y, depth + 1);
            if (!v) return std::nullopt;
            return B.neg(*v);
        }
        case Token::Inv: {
            auto v = parse_term(B, w, pos, x, y, depth + 1);
            if (!v) return std::nullopt;
            return B.inv(*v);
        }
        case Token::LParen: {
            auto v = parse_expr(B, w, pos, x, y, depth + 1);
            if (!v || pos >= w.size() || w[pos] != Token::RParen)
                return std::nullopt;
            ++pos;
            return v;
        }
        default: return std::nullopt;
    }
}

std::optional<int> parse_expr(const Brace& B, const std::vector<Token>& w,
                              size_t& pos, int x, int y, int depth) {
    auto v = parse_term(B, w, pos, x, y, depth);
    if (!v) return std::nullopt;
    while (pos < w.size() &&
           (w[pos] == Token::Plus || w[pos] == Token::Times)) {
        Token op = w[pos++];
        auto rhs = parse_term(B, w, pos, x, y, depth);
        if (!rhs) return std::nullopt;
        v = op == Token::Plus ? B.add(*v, *rhs) : B.mul(*v, *rhs);
    }
    return v;
}

}  // namespace

std::optional<int> evaluate_word(const Brace& B, const PolynomialWord& w,
                                 int x, int y) {
    size_t pos = 0;
    auto v = parse_expr(B, w.tokens, pos, x, y, 0);
    if (!v || pos != w.tokens.size()) return std::nullopt;
    return v;
}

bool is_absorbing(const Brace& B, const PolynomialWord& w) {
    for (int a = 0; a < B.order(); ++a) {
        auto u = evaluate_word(B, w, a, 0);
        auto v = evaluate_word(B, w, 0, a);
        if (!u || !v || *u != 0 || *v != 0) return false;
    }
    return true;
}

PolynomialWord canonical_additive_commutator() {
    using T = Token;
    return {{T::Neg, T::X, T::Plus, T::Neg, T::Y, T::Plus, T::X, T::Plus,
             T::Y}};
}

PolynomialWord canonical_multiplicative_commutator() {
    using T = Token;
    return {{T::Inv, T::X, T::Times, T::Inv, T::Y, T::Times, T::X, T::Times,
             T::Y}};
}

PolynomialWord canonical_product_defect() {
    using T = Token;
    return {{T::X, T::Times, T::Y, T::Plus, T::Neg, T::LParen, T::X, T::Plus,
             T::Y, T::RParen}};
}

WordSample sample_absorbing_words(const Brace& B, std::uint64_t samples,
                                  std::uint64_t seed) {
    WordSample out;
    for (const auto& w : {canonical_additive_commutator(),
                          canonical_multiplicative_commutator(),
                          canonical_product_defect()}) {
        if (!is_absorbing(B, w))
            throw BraceError("canonical word failed the absorbing check");
        out.words.push_back(w);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 24);
    std::uniform_int_distribution<int> tok_dist(0, 8);
    // samples counts accepted absorbing words, not raw draws; the attempt
    // budget guards against degenerate rejection rates
    std::uint64_t budget = samples * 200;
    while (out.words_absorbing < samples && out.words_generated < budget) {
        PolynomialWord w;
        int len = len_dist(rng);
        for (int k = 0; k < len; ++k)
            w.tokens.push_back(static_cast<Token>(tok_dist(rng)));
        ++out.words_generated;
        if (!evaluate_word(B, w, 0, 0)) continue;
        ++out.words_parsed;
        if (!is_absorbing(B, w)) continue;
        ++out.words_absorbing;
        out.words.push_back(std::move(w));
    }
    return out;
}

ElemSet evaluate_words_over(const Brace& B,
                            const std::vector<PolynomialWord>& words,
                            const ElemSet& I, const ElemSet& J) {
    ElemSet values(B.order());
    auto is = I.indices();
    auto js = J.indices();
    for (const auto& w : words)
        for (int i : is)
            for (int j : js) values.add(*evaluate_word(B, w, i, j));
    return values;
}

AbsorbingSample sample_absorbing_values(const Brace& B, const ElemSet& I,
                                        const ElemSet& J,
                                        std::uint64_t samples,
                                        std::uint64_t seed) {
    WordSample ws = sample_absorbing_words(B, samples, seed);
    AbsorbingSample out;
    out.words_generated = ws.words_generated;
    out.words_parsed = ws.words_parsed;
    out.words_absorbing = ws.words_absorbing;
    out.values = evaluate_words_over(B, ws.words, I, J);
    return out;
}

}  // namespace skewbrace
