#include "skewbrace/substructure.hpp"

#include <algorithm>

namespace skewbrace {

SubSet classify(const Brace& B, const ElemSet& bits) {
    SubSet s;
    s.bits = bits;
    int n = B.order();
    if (!bits.contains(0)) return s;
    auto el = bits.indices();
    for (int a : el) {
        if (!bits.contains(B.neg(a)) || !bits.contains(B.inv(a))) return s;
        for (int b : el)
            if (!bits.contains(B.add(a, b)) || !bits.contains(B.mul(a, b)))
                return s;
    }
    s.is_subbrace = true;
    for (int b = 0; b < n; ++b)
        for (int a : el)
            if (!bits.contains(B.lambda(b, a))) return s;
    s.is_left_ideal = true;
    for (int b = 0; b < n; ++b)
        for (int a : el)
            if (!bits.contains(B.sub(B.add(b, a), b))) return s;
    s.is_strong_left_ideal = true;
    for (int b = 0; b < n; ++b)
        for (int a : el)
            if (!bits.contains(B.mul(B.mul(b, a), B.inv(b)))) return s;
    s.is_ideal = true;
    return s;
}

namespace {

// closes seed under the supplied one-step expansion until stable
template <typename Step>
ElemSet fixpoint(int n, ElemSet cur, Step step) {
    cur.add(0);
    bool changed = true;
    while (changed) {
        changed = false;
        ElemSet next = cur;
        step(cur, next);
        if (next != cur) {
            cur = next;
            changed = true;
        }
    }
    return cur;
}

}  // namespace

ElemSet additive_closure(const Brace& B, const ElemSet& seed) {
    return fixpoint(B.order(), seed, [&](const ElemSet& c, ElemSet& nx) {
        auto el = c.indices();
        for (int a : el) {
            nx.add(B.neg(a));
            for (int b : el) nx.add(B.add(a, b));
        }
    });
}

ElemSet subbrace_closure(const Brace& B, const ElemSet& seed) {
    return fixpoint(B.order(), seed, [&](const ElemSet& c, ElemSet& nx) {
        auto el = c.indices();
        for (int a : el) {
            nx.add(B.neg(a));
            nx.add(B.inv(a));
            for (int b : el) {
                nx.add(B.add(a, b));
                nx.add(B.mul(a, b));
            }
        }
    });
}

ElemSet ideal_closure(const Brace& B, const ElemSet& seed) {
    int n = B.order();
    return fixpoint(n, seed, [&](const ElemSet& c, ElemSet& nx) {
        auto el = c.indices();
        for (int a : el) {
            nx.add(B.neg(a));
            nx.add(B.inv(a));
            for (int b : el) {
                nx.add(B.add(a, b));
                nx.add(B.mul(a, b));
            }
            for (int b = 0; b < n; ++b) {
                nx.add(B.lambda(b, a));
                nx.add(B.sub(B.add(b, a), b));
                nx.add(B.mul(B.mul(b, a), B.inv(b)));
            }
        }
    });
}

std::vector<ElemSet> all_additive_subgroups(const Brace& B) {
    int n = B.order();
    std::vector<ElemSet> found{ElemSet::single(n, 0)};
    std::vector<ElemSet> queue = found;
    auto known = [&](const ElemSet& s) {
        return std::find(found.begin(), found.end(), s) != found.end();
    };
    while (!queue.empty()) {
        ElemSet s = queue.back();
        queue.pop_back();
        for (int x = 0; x < n; ++x) {
            if (s.contains(x)) continue;
            ElemSet t = s;
            t.add(x);
            t = additive_closure(B, t);
            if (!known(t)) {
                found.push_back(t);
                queue.push_back(t);
            }
        }
    }
    return found;
}

std::vector<SubSet> all_substructures(const Brace& B, Kind kind) {
    std::vector<SubSet> out;
    for (const auto& g : all_additive_subgroups(B)) {
        SubSet s = classify(B, g);
        if (s.has(kind)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const SubSet& a, const SubSet& b) { return a.bits.before(b.bits); });
    return out;
}

std::vector<SubSet> extremal(const Brace& B, Kind kind, bool maximal) {
    auto lattice = all_substructures(B, kind);
    int n = B.order();
    std::vector<SubSet> out;
    for (const auto& s : lattice) {
        if (maximal) {
            if (s.bits.count() == n) continue;
            bool covered = false;
            for (const auto& t : lattice)
                if (t.bits.count() < n && s.bits.proper_subset_of(t.bits)) {
                    covered = true;
                    break;
                }
            if (!covered) out.push_back(s);
        } else {
            if (s.bits.count() == 1) continue;
            bool over = false;
            for (const auto& t : lattice)
                if (t.bits.count() > 1 && t.bits.proper_subset_of(s.bits)) {
                    over = true;
                    break;
                }
            if (!over) out.push_back(s);
        }
    }
    return out;
}

SubSet core_of(const Brace& B, const ElemSet& C) {
    if (!classify(B, C).is_subbrace)
        throw NotASubbrace("core_of: argument is not a subbrace");
    ElemSet best = ElemSet::single(B.order(), 0);
    auto ideals = all_substructures(B, Kind::Ideal);
    for (const auto& I : ideals)
        if (I.bits.subset_of(C) && best.subset_of(I.bits)) best = I.bits;
    // the sum of two ideals inside a subbrace stays inside it, so the
    // maximum is unique; verify rather than assume
    for (const auto& I : ideals)
        if (I.bits.subset_of(C) && !I.bits.subset_of(best))
            throw BraceError("core_of: ideal family below C has no maximum");
    return classify(B, best);
}

SubSet sum_and_product(const Brace& B, const ElemSet& I, const ElemSet& J) {
    if (!classify(B, I).is_ideal || !classify(B, J).is_ideal)
        throw NotAnIdeal("sum_and_product: inputs must be ideals");
    int n = B.order();
    ElemSet sum(n), prod(n);
    for (int i : I.indices())
        for (int j : J.indices()) {
            sum.add(B.add(i, j));
            prod.add(B.mul(i, j));
        }
    if (sum != prod)
        throw BraceError("sum_and_product: I+J differs from IJ");
    SubSet s = classify(B, sum);
    if (!s.is_ideal) throw BraceError("sum_and_product: I+J is not an ideal");
    return s;
}

ElemSet socle_set(const Brace& B) {
    int n = B.order();
    ElemSet s(n);
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = B.mul(a, b) == B.add(a, b) && B.add(a, b) == B.add(b, a);
        if (ok) s.add(a);
    }
    return s;
}

ElemSet fix_set(const Brace& B) {
    int n = B.order();
    ElemSet s(n);
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = B.lambda(b, a) == a;
        if (ok) s.add(a);
    }
    return s;
}

ElemSet centre_set(const Brace& B) {
    return socle_set(B) & fix_set(B);
}

ElemSet kernel_lambda_set(const Brace& B) {
    int n = B.order();
    ElemSet s(n);
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = B.lambda(a, b) == b;
        if (ok) s.add(a);
    }
    return s;
}

}  // namespace skewbrace
