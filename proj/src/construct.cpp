#include "skewbrace/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace skewbrace {

namespace {

Table cyclic_table(int m) {
    Table t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return t;
}

Table product_table(const Table& a, const Table& b) {
    int n1 = a.size(), n2 = b.size();
    Table t(n1 * n2, std::vector<int>(n1 * n2));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n1; ++k)
                for (int l = 0; l < n2; ++l)
                    t[i * n2 + j][k * n2 + l] = a[i][k] * n2 + b[j][l];
    return t;
}

Table dihedral_table(int m) {  // order 2m, elements r^i s^j at i + m*j
    Table t(2 * m, std::vector<int>(2 * m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < 2; ++l) {
                    int rot = j ? (i - k + m) % m : (i + k) % m;
                    t[i + m * j][k + m * l] = rot + m * ((j + l) % 2);
                }
    return t;
}

Table dicyclic_table(int m) {  // order 4m, a^i b^j at i + 2m*j, b^2 = a^m
    int M = 2 * m;
    Table t(4 * m, std::vector<int>(4 * m));
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < M; ++k)
                for (int l = 0; l < 2; ++l) {
                    int rot = j ? (i - k + M) % M : (i + k) % M;
                    int flip = j + l;
                    if (flip == 2) {
                        rot = (rot + m) % M;
                        flip = 0;
                    }
                    t[i + M * j][k + M * l] = rot + M * flip;
                }
    return t;
}

Table a4_table() {
    // even permutations of four points, identity first
    std::vector<std::array<int, 4>> el;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2 == 0) el.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    Table t(12, std::vector<int>(12));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            std::array<int, 4> c;
            for (int x = 0; x < 4; ++x) c[x] = el[i][el[j][x]];
            t[i][j] = std::find(el.begin(), el.end(), c) - el.begin();
        }
    return t;
}

Table abelian_table(const std::vector<int>& factors) {
    Table t = cyclic_table(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
        t = product_table(t, cyclic_table(factors[i]));
    return t;
}

}  // namespace

std::vector<Table> groups_of_order(int n) {
    // complete up to isomorphism for n <= 15
    std::vector<Table> out;
    switch (n) {
        case 1: out = {cyclic_table(1)}; break;
        case 2: out = {cyclic_table(2)}; break;
        case 3: out = {cyclic_table(3)}; break;
        case 4: out = {cyclic_table(4), abelian_table({2, 2})}; break;
        case 5: out = {cyclic_table(5)}; break;
        case 6: out = {cyclic_table(6), dihedral_table(3)}; break;
        case 7: out = {cyclic_table(7)}; break;
        case 8:
            out = {cyclic_table(8), abelian_table({4, 2}),
                   abelian_table({2, 2, 2}), dihedral_table(4),
                   dicyclic_table(2)};
            break;
        case 9: out = {cyclic_table(9), abelian_table({3, 3})}; break;
        case 10: out = {cyclic_table(10), dihedral_table(5)}; break;
        case 11: out = {cyclic_table(11)}; break;
        case 12:
            out = {cyclic_table(12), abelian_table({6, 2}), dihedral_table(6),
                   a4_table(), dicyclic_table(3)};
            break;
        case 13: out = {cyclic_table(13)}; break;
        case 14: out = {cyclic_table(14), dihedral_table(7)}; break;
        case 15: out = {cyclic_table(15)}; break;
        default:
            throw OrderTooLarge("no complete group catalogue for order " +
                                std::to_string(n));
    }
    return out;
}

namespace {

int element_order(const Table& t, int x) {
    int k = 1, y = x;
    while (y != 0) {
        y = t[y][x];
        ++k;
    }
    return k;
}

// greedy generating sequence: repeatedly adjoin the smallest element
// outside the current closure
std::vector<int> group_generators(const Table& t) {
    int n = t.size();
    std::vector<char> in(n, 0);
    in[0] = 1;
    int covered = 1;
    std::vector<int> gens;
    while (covered < n) {
        int g = 0;
        while (in[g]) ++g;
        gens.push_back(g);
        // close under multiplication by the new generator set
        bool grew = true;
        in[g] = 1;
        ++covered;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a)
                if (in[a])
                    for (int b = 0; b < n; ++b)
                        if (in[b] && !in[t[a][b]]) {
                            in[t[a][b]] = 1;
                            ++covered;
                            grew = true;
                        }
        }
    }
    return gens;
}

// extends a partial map by multiplicative closure on every given table
// pair; returns false on conflict
bool close_map(const std::vector<const Table*>& src,
               const std::vector<const Table*>& dst, std::vector<int>& m,
               std::vector<int>& dom) {
    for (size_t head = 0; head < dom.size(); ++head) {
        int a = dom[head];
        for (size_t bi = 0; bi < dom.size(); ++bi) {
            int b = dom[bi];
            for (size_t ti = 0; ti < src.size(); ++ti) {
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                    int p = (*src[ti])[x][y];
                    int q = (*dst[ti])[m[x]][m[y]];
                    if (m[p] == -1) {
                        m[p] = q;
                        dom.push_back(p);
                    } else if (m[p] != q) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool extend_iso(const std::vector<const Table*>& src,
                const std::vector<const Table*>& dst,
                const std::vector<int>& gens, size_t gi, std::vector<int>& m,
                std::vector<int> dom,
                const std::vector<std::vector<int>>& profiles,
                std::vector<std::vector<int>>* all_out) {
    int n = src[0]->size();
    if ((int)dom.size() == n) {
        // closure produces homomorphisms; keep only the bijective ones
        std::vector<char> hit(n, 0);
        for (int v : m) hit[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!hit[v]) return false;
        if (all_out) {
            all_out->push_back(m);
            return false;  // keep searching for every automorphism
        }
        return true;
    }
    int g = gens[gi];
    if (m[g] != -1)  // image already forced by closure
        return extend_iso(src, dst, gens, gi + 1, m, dom, profiles, all_out);
    for (int img = 0; img < n; ++img) {
        if (profiles[g] != profiles[n + img]) continue;
        bool used = false;
        for (int d : dom)
            if (m[d] == img) {
                used = true;
                break;
            }
        if (used) continue;
        std::vector<int> m2 = m;
        std::vector<int> dom2 = dom;
        m2[g] = img;
        dom2.push_back(g);
        if (close_map(src, dst, m2, dom2)) {
            if (extend_iso(src, dst, gens, gi + 1, m2, dom2, profiles, all_out)) {
                m = m2;
                return true;
            }
        }
    }
    return false;
}

// profiles[i] for source elements, profiles[n+i] for target elements
std::vector<std::vector<int>> order_profiles(
    const std::vector<const Table*>& src,
    const std::vector<const Table*>& dst) {
    int n = src[0]->size();
    std::vector<std::vector<int>> p(2 * n);
    for (int i = 0; i < n; ++i) {
        for (auto* t : src) p[i].push_back(element_order(*t, i));
        for (auto* t : dst) p[n + i].push_back(element_order(*t, i));
    }
    return p;
}

std::vector<int> iso_search(const std::vector<const Table*>& src,
                            const std::vector<const Table*>& dst) {
    int n = src[0]->size();
    if ((int)dst[0]->size() != n) return {};
    auto profiles = order_profiles(src, dst);
    {
        std::vector<std::vector<int>> a(profiles.begin(), profiles.begin() + n);
        std::vector<std::vector<int>> b(profiles.begin() + n, profiles.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {};
    }
    auto gens = group_generators(*src[0]);
    std::vector<int> m(n, -1);
    m[0] = 0;
    std::vector<int> dom{0};
    if (gens.empty()) return m;
    if (extend_iso(src, dst, gens, 0, m, dom, profiles, nullptr))
        return m;
    return {};
}

}  // namespace

std::vector<std::vector<int>> automorphism_group(const Table& t) {
    int n = t.size();
    std::vector<const Table*> src{&t}, dst{&t};
    auto profiles = order_profiles(src, dst);
    auto gens = group_generators(t);
    std::vector<std::vector<int>> all;
    std::vector<int> m(n, -1);
    m[0] = 0;
    std::vector<int> dom{0};
    if (gens.empty()) return {std::vector<int>{0}};
    extend_iso(src, dst, gens, 0, m, dom, profiles, &all);
    std::sort(all.begin(), all.end());
    return all;
}

Brace trivial_brace(const Table& group, std::string name) {
    int n = group.size();
    return validate_brace(n, group, group, std::move(name));
}

Brace from_cocycle(const CocycleSpec& spec) {
    int n = spec.additive.size();
    int m = spec.actor.size();
    if (m != n)
        throw DeltaNotBijective("cocycle: |C| must equal |B|");
    check_group_table(n, spec.additive, "additive");
    check_group_table(m, spec.actor, "actor");
    if ((int)spec.delta.size() != m) throw DeltaNotBijective("delta wrong length");
    {
        std::vector<char> seen(n, 0);
        for (int v : spec.delta) {
            if (v < 0 || v >= n || seen[v])
                throw DeltaNotBijective("delta is not a bijection onto B");
            seen[v] = 1;
        }
    }
    const auto& A = spec.additive;
    std::vector<int> neg(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A[i][j] == 0) neg[i] = j;
    if ((int)spec.action.size() != m)
        throw ActionNotHomomorphism("action table wrong shape");
    for (int c = 0; c < m; ++c) {
        const auto& l = spec.action[c];
        if ((int)l.size() != n)
            throw ActionNotHomomorphism("action table wrong shape");
        std::vector<char> seen(n, 0);
        for (int v : l) {
            if (v < 0 || v >= n || seen[v])
                throw ActionNotHomomorphism("action row " + std::to_string(c) +
                                            " is not a permutation");
            seen[v] = 1;
        }
        if (l[0] != 0)
            throw ActionNotHomomorphism("action row " + std::to_string(c) +
                                        " moves 0");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (l[A[x][y]] != A[l[x]][l[y]])
                    throw ActionNotHomomorphism(
                        "action row " + std::to_string(c) +
                        " is not an additive automorphism");
    }
    for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
            int cd = spec.actor[c][d];
            for (int x = 0; x < n; ++x)
                if (spec.action[cd][x] != spec.action[c][spec.action[d][x]])
                    throw ActionNotHomomorphism(
                        "action is not a homomorphism at (" +
                        std::to_string(c) + "," + std::to_string(d) + ")");
            // delta(cd) = delta(c) + lambda_c(delta(d))
            if (spec.delta[cd] != A[spec.delta[c]][spec.action[c][spec.delta[d]]])
                throw CocycleIdentityFailure("cocycle identity fails at (" +
                                             std::to_string(c) + "," +
                                             std::to_string(d) + ")");
        }
    Table mul(n, std::vector<int>(n));
    for (int c = 0; c < m; ++c) {
        int a = spec.delta[c];
        for (int x = 0; x < n; ++x) mul[a][x] = A[a][spec.action[c][x]];
    }
    Brace B = validate_brace(n, spec.additive, mul, spec.name);
    for (int c = 0; c < m; ++c)
        for (int x = 0; x < n; ++x)
            if (B.lambda(spec.delta[c], x) != spec.action[c][x])
                throw ActionNotHomomorphism(
                    "resulting brace action disagrees with the input action");
    return B;
}

Brace from_regular_subgroup(const Table& add,
                            const std::vector<HolElement>& subgroup,
                            std::string name) {
    int n = add.size();
    check_group_table(n, add, "add");
    if ((int)subgroup.size() != n)
        throw NotRegular("regular subgroup must have exactly |B| elements");
    for (const auto& h : subgroup) {
        if ((int)h.aut.size() != n || h.trans < 0 || h.trans >= n)
            throw NotASubgroup("malformed holomorph element");
        std::vector<char> hit(n, 0);
        for (int v : h.aut) {
            if (v < 0 || v >= n || hit[v])
                throw NotASubgroup("component is not a permutation");
            hit[v] = 1;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (h.aut[add[x][y]] != add[h.aut[x]][h.aut[y]])
                    throw NotASubgroup(
                        "component is not an additive automorphism");
    }
    std::vector<char> seen(n, 0);
    for (const auto& h : subgroup) {
        if (seen[h.trans])
            throw NotRegular("translation parts are not a bijection onto B");
        seen[h.trans] = 1;
    }
    auto find = [&](const HolElement& h) {
        return std::find(subgroup.begin(), subgroup.end(), h) != subgroup.end();
    };
    // (a, alpha)(b, beta) = (a + alpha(b), alpha o beta)
    for (const auto& p : subgroup)
        for (const auto& q : subgroup) {
            HolElement r;
            r.trans = add[p.trans][p.aut[q.trans]];
            r.aut.resize(n);
            for (int x = 0; x < n; ++x) r.aut[x] = p.aut[q.aut[x]];
            if (!find(r))
                throw NotASubgroup("holomorph subset not closed under product");
        }
    Table mul(n, std::vector<int>(n));
    for (const auto& h : subgroup)
        for (int x = 0; x < n; ++x) mul[h.trans][x] = add[h.trans][h.aut[x]];
    return validate_brace(n, add, mul, std::move(name));
}

Brace direct_product(const Brace& B1, const Brace& B2) {
    int n1 = B1.order(), n2 = B2.order();
    Table add = product_table(B1.add_table(), B2.add_table());
    Table mul = product_table(B1.mul_table(), B2.mul_table());
    std::string name;
    if (!B1.name().empty() || !B2.name().empty())
        name = B1.name() + "x" + B2.name();
    return validate_brace(n1 * n2, add, mul, name);
}

QuotientResult quotient(const Brace& B, const ElemSet& I) {
    if (!classify(B, I).is_ideal)
        throw NotAnIdeal("quotient: argument is not an ideal");
    int n = B.order();
    auto el = I.indices();
    std::vector<int> proj(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (proj[a] != -1) continue;
        int q = reps.size();
        // additive coset a + I; the multiplicative coset aI coincides
        for (int i : el) proj[B.add(a, i)] = q;
        for (int i : el)
            if (proj[B.mul(a, i)] != q)
                throw NotAnIdeal("quotient: additive and multiplicative cosets differ");
        reps.push_back(a);
    }
    int m = reps.size();
    Table add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            add[i][j] = proj[B.add(reps[i], reps[j])];
            mul[i][j] = proj[B.mul(reps[i], reps[j])];
        }
    // well-definedness: projection must be a homomorphism everywhere
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (proj[B.add(a, b)] != add[proj[a]][proj[b]] ||
                proj[B.mul(a, b)] != mul[proj[a]][proj[b]])
                throw NotAnIdeal("quotient: operations not well defined");
    QuotientResult r{validate_brace(m, add, mul, ""), std::move(proj),
                     std::move(reps)};
    return r;
}

RestrictResult restrict_to(const Brace& B, const ElemSet& S) {
    if (!classify(B, S).is_subbrace)
        throw NotASubbrace("restrict: argument is not a subbrace");
    auto el = S.indices();
    int m = el.size();
    std::vector<int> local(B.order(), -1);
    for (int i = 0; i < m; ++i) local[el[i]] = i;
    Table add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            add[i][j] = local[B.add(el[i], el[j])];
            mul[i][j] = local[B.mul(el[i], el[j])];
        }
    return {validate_brace(m, add, mul, ""), el};
}

IsoCertificate is_isomorphic(const Brace& B1, const Brace& B2) {
    IsoCertificate cert;
    if (B1.order() != B2.order()) return cert;
    std::vector<const Table*> src{&B1.add_table(), &B1.mul_table()};
    std::vector<const Table*> dst{&B2.add_table(), &B2.mul_table()};
    auto m = iso_search(src, dst);
    if (m.empty()) return cert;
    int n = B1.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (m[B1.add(a, b)] != B2.add(m[a], m[b]) ||
                m[B1.mul(a, b)] != B2.mul(m[a], m[b]))
                throw BraceError("isomorphism certificate failed verification");
    cert.isomorphic = true;
    cert.forward = std::move(m);
    return cert;
}

int enumeration_bound() {
    if (const char* e = std::getenv("SKEWBRACE_ENUM_BOUND")) return std::atoi(e);
    return 15;
}

namespace {

// DFS over lambda assignments: lambda_0 = id and
// lambda_{a + lambda_a(b)} = lambda_a o lambda_b
struct LambdaSearch {
    const Table& A;
    const std::vector<std::vector<int>>& auts;
    std::map<std::vector<int>, int> aut_index;
    int n;
    std::vector<std::vector<int>> solutions;  // assignment: element -> aut idx

    LambdaSearch(const Table& a, const std::vector<std::vector<int>>& au)
        : A(a), auts(au), n(a.size()) {
        for (size_t i = 0; i < auts.size(); ++i) aut_index[auts[i]] = i;
    }

    bool propagate(std::vector<int>& asg) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a) {
                if (asg[a] == -1) continue;
                for (int b = 0; b < n; ++b) {
                    if (asg[b] == -1) continue;
                    int c = A[a][auts[asg[a]][b]];
                    std::vector<int> comp(n);
                    for (int x = 0; x < n; ++x)
                        comp[x] = auts[asg[a]][auts[asg[b]][x]];
                    auto it = aut_index.find(comp);
                    if (it == aut_index.end()) return false;
                    if (asg[c] == -1) {
                        asg[c] = it->second;
                        grew = true;
                    } else if (asg[c] != it->second) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void dfs(std::vector<int> asg) {
        int a = 0;
        while (a < n && asg[a] != -1) ++a;
        if (a == n) {
            solutions.push_back(asg);
            return;
        }
        for (size_t i = 0; i < auts.size(); ++i) {
            std::vector<int> next = asg;
            next[a] = i;
            if (propagate(next)) dfs(std::move(next));
        }
    }
};

std::vector<int> brace_invariant(const Brace& B) {
    int n = B.order();
    std::vector<int> key;
    std::vector<std::pair<int, int>> prof;
    for (int i = 0; i < n; ++i)
        prof.emplace_back(element_order(B.add_table(), i),
                          element_order(B.mul_table(), i));
    std::sort(prof.begin(), prof.end());
    for (auto [a, b] : prof) {
        key.push_back(a);
        key.push_back(b);
    }
    key.push_back(socle_set(B).count());
    key.push_back(fix_set(B).count());
    key.push_back(kernel_lambda_set(B).count());
    return key;
}

}  // namespace

std::vector<Brace> enumerate_braces(int n, bool up_to_iso) {
    if (n < 1 || n > enumeration_bound())
        throw OrderTooLarge("enumeration bound is " +
                            std::to_string(enumeration_bound()));
    std::vector<Brace> out;
    for (const auto& A : groups_of_order(n)) {
        auto auts = automorphism_group(A);
        LambdaSearch search(A, auts);
        std::vector<int> asg(n, -1);
        asg[0] = search.aut_index.at([&] {
            std::vector<int> id(n);
            std::iota(id.begin(), id.end(), 0);
            return id;
        }());
        if (!search.propagate(asg)) continue;
        search.dfs(asg);
        std::vector<Brace> batch;
        for (const auto& sol : search.solutions) {
            std::vector<HolElement> sub;
            for (int a = 0; a < n; ++a) sub.push_back({auts[sol[a]], a});
            batch.push_back(from_regular_subgroup(A, sub));
        }
        if (up_to_iso) {
            std::vector<Brace> kept;
            std::vector<std::vector<int>> keys;
            for (auto& b : batch) {
                auto key = brace_invariant(b);
                bool dup = false;
                for (size_t i = 0; i < kept.size(); ++i)
                    if (keys[i] == key && is_isomorphic(kept[i], b).isomorphic) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    kept.push_back(std::move(b));
                    keys.push_back(std::move(key));
                }
            }
            batch = std::move(kept);
        }
        for (auto& b : batch) out.push_back(std::move(b));
    }
    return out;
}

}  // namespace skewbrace
