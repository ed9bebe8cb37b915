#include "skewbrace/series.hpp"

#include <algorithm>

#include "skewbrace/commutator.hpp"
#include "skewbrace/construct.hpp"

namespace skewbrace {

namespace {

ElemSet zero_set(const Brace& B) {
    return ElemSet::single(B.order(), 0);
}

ElemSet pull_back(const std::vector<int>& proj, int n, const ElemSet& down) {
    ElemSet up(n);
    for (int a = 0; a < n; ++a)
        if (down.contains(proj[a])) up.add(a);
    return up;
}

void finish(Series& s, const ElemSet& target_terminal) {
    s.stabilised = true;
    s.terminal = s.chain.back().bits;
    if (s.terminal == target_terminal) s.length = (int)s.chain.size() - 1;
}

}  // namespace

Series upper_central_series(const Brace& B) {
    Series s{SeriesKind::UpperCentral, {}, false, {}, std::nullopt, {}};
    s.chain.push_back(classify(B, zero_set(B)));
    while (true) {
        auto q = quotient(B, s.chain.back().bits);
        ElemSet next = pull_back(q.projection, B.order(), centre_set(q.brace));
        if (next == s.chain.back().bits) break;
        s.chain.push_back(classify(B, next));
    }
    finish(s, ElemSet::full(B.order()));
    return s;
}

Series lower_central_series(const Brace& B) {
    Series s{SeriesKind::LowerCentral, {}, false, {}, std::nullopt, {}};
    ElemSet whole = ElemSet::full(B.order());
    s.chain.push_back(classify(B, whole));
    while (true) {
        ElemSet next = commutator_ideal(B, s.chain.back().bits, whole).bits;
        if (next == s.chain.back().bits) break;
        s.chain.push_back(classify(B, next));
    }
    finish(s, zero_set(B));
    return s;
}

Series derived_series(const Brace& B, std::optional<ElemSet> I) {
    Series s{SeriesKind::Derived, {}, false, {}, std::nullopt, {}};
    ElemSet start = I ? *I : ElemSet::full(B.order());
    SubSet top = classify(B, start);
    if (!top.is_ideal) throw NotAnIdeal("derived series needs an ideal");
    s.chain.push_back(top);
    while (true) {
        const ElemSet& cur = s.chain.back().bits;
        ElemSet next = commutator_ideal(B, cur, cur).bits;
        if (next == cur) break;
        s.chain.push_back(classify(B, next));
    }
    finish(s, zero_set(B));
    return s;
}

std::optional<int> nilpotency_class(const Brace& B) {
    Series up = upper_central_series(B);
    Series lo = lower_central_series(B);
    if (up.length.has_value() != lo.length.has_value())
        throw BraceError("central series disagree on nilpotency");
    if (!up.length) return std::nullopt;
    if (*up.length != *lo.length)
        throw BraceError("central series disagree on the class");
    return up.length;
}

Series chief_series(const Brace& B, bool reverse) {
    Series s{SeriesKind::Chief, {}, false, {}, std::nullopt, {}};
    s.chain.push_back(classify(B, zero_set(B)));
    while (s.chain.back().bits.count() < B.order()) {
        auto q = quotient(B, s.chain.back().bits);
        auto ideals = all_substructures(q.brace, Kind::Ideal);
        // minimal non-zero ideals of the quotient
        std::vector<ElemSet> minimal;
        for (const auto& cand : ideals) {
            if (cand.bits.count() == 1) continue;
            bool min = true;
            for (const auto& other : ideals)
                if (other.bits.count() > 1 &&
                    other.bits.proper_subset_of(cand.bits)) {
                    min = false;
                    break;
                }
            if (min) minimal.push_back(cand.bits);
        }
        ElemSet pick = minimal[0];
        for (const auto& m : minimal)
            if (reverse ? pick.before(m) : m.before(pick)) pick = m;
        ChiefFactor f;
        f.order = pick.count();
        f.central = pick.subset_of(centre_set(q.brace));
        s.factors.push_back(f);
        s.chain.push_back(
            classify(B, pull_back(q.projection, B.order(), pick)));
    }
    s.stabilised = true;
    s.terminal = s.chain.back().bits;
    s.length = (int)s.chain.size() - 1;
    return s;
}

namespace {

// centre of the ideal viewed as a brace in its own right, as a subset of B
ElemSet ideal_centre(const Brace& B, const ElemSet& I) {
    auto r = restrict_to(B, I);
    ElemSet c = centre_set(r.brace);
    ElemSet out(B.order());
    for (int i : c.indices()) out.add(r.elements[i]);
    return out;
}

}  // namespace

Series b_central_series(const Brace& B, const ElemSet& I, bool upper) {
    if (!classify(B, I).is_ideal)
        throw NotAnIdeal("B-central series needs an ideal");
    Series s{upper ? SeriesKind::BUpper : SeriesKind::BLower,
             {}, false, {}, std::nullopt, {}};
    if (!upper) {
        s.chain.push_back(classify(B, I));
        while (true) {
            ElemSet next = commutator_ideal(B, s.chain.back().bits, I).bits;
            if (next == s.chain.back().bits) break;
            s.chain.push_back(classify(B, next));
        }
        finish(s, zero_set(B));
        return s;
    }
    s.chain.push_back(classify(B, zero_set(B)));
    while (true) {
        auto q = quotient(B, s.chain.back().bits);
        ElemSet Ibar(q.brace.order());
        for (int a : I.indices()) Ibar.add(q.projection[a]);
        // largest ideal of the quotient inside the centre of the image
        ElemSet c = ideal_centre(q.brace, Ibar);
        ElemSet step = core_of(q.brace, c).bits;
        ElemSet next = pull_back(q.projection, B.order(), step);
        if (next == s.chain.back().bits) break;
        s.chain.push_back(classify(B, next));
    }
    finish(s, I);
    return s;
}

BCentralReport b_central_report(const Brace& B, const ElemSet& I) {
    BCentralReport r;
    r.lower = b_central_series(B, I, false);
    r.upper = b_central_series(B, I, true);
    if (r.lower.length.has_value() != r.upper.length.has_value())
        throw BraceError("B-central series verdicts disagree");
    r.nilpotent = r.lower.length.has_value();
    if (r.nilpotent) {
        if (*r.lower.length != *r.upper.length)
            throw BraceError("B-central series classes disagree");
        r.cls = r.lower.length;
    }
    return r;
}

std::vector<ElemSet> group_upper_central_series(const Table& t) {
    int n = t.size();
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t[i][j] == 0) inv[i] = j;
    std::vector<ElemSet> chain{ElemSet::single(n, 0)};
    while (true) {
        const ElemSet& z = chain.back();
        ElemSet next(n);
        for (int a = 0; a < n; ++a) {
            bool ok = true;
            for (int b = 0; b < n && ok; ++b)
                if (!z.contains(t[t[inv[a]][inv[b]]][t[a][b]])) ok = false;
            if (ok) next.add(a);
        }
        if (next == z) break;
        chain.push_back(next);
    }
    return chain;
}

}  // namespace skewbrace
