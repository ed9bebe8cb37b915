#include "skewbrace/subideal.hpp"

#include "skewbrace/construct.hpp"
#include "skewbrace/series.hpp"

namespace skewbrace {

ClosureSeries ideal_closure_series(const Brace& B, const ElemSet& C) {
    if (!classify(B, C).is_subbrace)
        throw NotASubbrace("closure series needs a subbrace");
    ClosureSeries s;
    s.chain.push_back(ElemSet::full(B.order()));
    while (true) {
        const ElemSet& cur = s.chain.back();
        auto r = restrict_to(B, cur);
        std::vector<int> local(B.order(), -1);
        for (size_t i = 0; i < r.elements.size(); ++i)
            local[r.elements[i]] = i;
        ElemSet seed(r.brace.order());
        for (int a : C.indices()) seed.add(local[a]);
        ElemSet down = ideal_closure(r.brace, seed);
        ElemSet next(B.order());
        for (int i : down.indices()) next.add(r.elements[i]);
        if (next == cur) break;
        s.chain.push_back(next);
    }
    s.stabilised = true;
    s.subideal = s.chain.back() == C;
    if (s.subideal) {
        for (size_t k = 0; k < s.chain.size(); ++k)
            if (s.chain[k] == C) {
                s.defect = (int)k;
                break;
            }
    }
    return s;
}

IndexReport index_of(const Brace& B, const ElemSet& C) {
    if (!classify(B, C).is_subbrace)
        throw NotASubbrace("index needs a subbrace");
    IndexReport r;
    int m = C.count();
    // Lagrange on the shared carrier: both groups have the same subgroup C
    r.additive_index = B.order() / m;
    r.multiplicative_index = B.order() / m;
    r.common_index = r.additive_index;
    auto s = ideal_closure_series(B, C);
    r.subideal = s.subideal;
    r.defect = s.defect;
    return r;
}

IdealiserReport idealiser_report(const Brace& B, const ElemSet& S) {
    if (!classify(B, S).is_subbrace)
        throw NotASubbrace("idealiser report needs a subbrace");
    IdealiserReport r;
    for (const auto& N : all_substructures(B, Kind::Subbrace)) {
        if (!S.subset_of(N.bits)) continue;
        auto res = restrict_to(B, N.bits);
        std::vector<int> local(B.order(), -1);
        for (size_t i = 0; i < res.elements.size(); ++i)
            local[res.elements[i]] = i;
        ElemSet img(res.brace.order());
        for (int a : S.indices()) img.add(local[a]);
        if (classify(res.brace, img).is_ideal) r.admitting.push_back(N.bits);
    }
    ElemSet top = r.admitting[0];
    for (const auto& a : r.admitting)
        if (top.before(a)) top = a;
    r.has_maximum = true;
    for (const auto& a : r.admitting)
        if (!a.subset_of(top)) {
            r.has_maximum = false;
            break;
        }
    if (r.has_maximum) {
        r.idealiser = top;
        return r;
    }
    // pick two inclusion-maximal admitting members with a non-admitting join
    auto is_admitting = [&](const ElemSet& x) {
        for (const auto& a : r.admitting)
            if (a == x) return true;
        return false;
    };
    std::vector<ElemSet> maximal;
    for (const auto& a : r.admitting) {
        bool max = true;
        for (const auto& b : r.admitting)
            if (a.proper_subset_of(b)) {
                max = false;
                break;
            }
        if (max) maximal.push_back(a);
    }
    for (size_t i = 0; i < maximal.size() && !r.obstruction; ++i)
        for (size_t j = i + 1; j < maximal.size() && !r.obstruction; ++j) {
            ElemSet join = subbrace_closure(B, maximal[i] | maximal[j]);
            if (!is_admitting(join))
                r.obstruction = {maximal[i], maximal[j]};
        }
    return r;
}

NormaliserReport strong_left_normaliser(const Brace& B, const ElemSet& C) {
    if (!classify(B, C).is_subbrace)
        throw NotASubbrace("normaliser needs a subbrace");
    int n = B.order();
    auto qualifies = [&](int x) {
        ElemSet addc(n), mulc(n), lam(n);
        for (int c : C.indices()) {
            addc.add(B.add(B.add(x, c), B.neg(x)));
            mulc.add(B.mul(B.mul(x, c), B.inv(x)));
            lam.add(B.lambda(x, c));
        }
        return addc == C && mulc == C && lam == C;
    };
    std::vector<ElemSet> good;
    for (const auto& N : all_substructures(B, Kind::StrongLeftIdeal)) {
        bool ok = true;
        for (int x : N.bits.indices())
            if (!qualifies(x)) {
                ok = false;
                break;
            }
        if (ok) good.push_back(N.bits);
    }
    ElemSet best = good[0];
    for (const auto& g : good)
        if (best.before(g)) best = g;
    for (const auto& g : good)
        if (!g.subset_of(best))
            throw BraceError("qualifying strong left ideals have no maximum");
    NormaliserReport r;
    r.normaliser = classify(B, best);
    r.contains_subbrace = C.subset_of(best);
    return r;
}

SubidealAudit subideal_audit(const Brace& B) {
    SubidealAudit r;
    r.all_subideal = true;
    for (const auto& S : all_substructures(B, Kind::Subbrace)) {
        auto s = ideal_closure_series(B, S.bits);
        r.entries.push_back({S.bits, s.subideal, s.defect});
        r.all_subideal = r.all_subideal && s.subideal;
    }
    r.nilpotency = nilpotency_class(B);
    r.soluble = derived_series(B).length.has_value();
    return r;
}

}  // namespace skewbrace
