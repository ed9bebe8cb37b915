#include "skewbrace/radicals.hpp"

#include <algorithm>

#include "skewbrace/commutator.hpp"
#include "skewbrace/series.hpp"

namespace skewbrace {

SubSet distinguished_ideal(const Brace& B, Distinguished which) {
    ElemSet set;
    switch (which) {
        case Distinguished::Socle: set = socle_set(B); break;
        case Distinguished::Fix: set = fix_set(B); break;
        case Distinguished::Centre: set = centre_set(B); break;
        case Distinguished::KernelLambda: set = kernel_lambda_set(B); break;
    }
    SubSet s = classify(B, set);
    if ((which == Distinguished::Socle || which == Distinguished::Centre) &&
        !s.is_ideal)
        throw BraceError("distinguished set failed its ideal check");
    if (which == Distinguished::Fix && !s.is_left_ideal)
        throw BraceError("fix set failed its left-ideal check");
    return s;
}

SubSet fitting_ideal(const Brace& B) {
    ElemSet acc = ElemSet::single(B.order(), 0);
    for (const auto& I : all_substructures(B, Kind::Ideal))
        if (b_central_report(B, I.bits).nilpotent)
            acc = sum_and_product(B, acc, I.bits).bits;
    SubSet s = classify(B, acc);
    if (!s.is_ideal) throw BraceError("Fitting sum is not an ideal");
    if (!b_central_report(B, s.bits).nilpotent)
        throw BraceError("Fitting ideal failed its own nilpotency check");
    return s;
}

std::vector<SubSet> maximal_left_ideals(const Brace& B) {
    return extremal(B, Kind::LeftIdeal, true);
}

SubSet frattini_ideal(const Brace& B) {
    ElemSet acc = fitting_ideal(B).bits;
    for (const auto& L : maximal_left_ideals(B)) acc = acc & L.bits;
    SubSet s = classify(B, acc);
    if (!s.is_ideal) throw BraceError("Frattini set is not an ideal");
    return s;
}

ElemSet non_generators(const Brace& B) {
    int n = B.order();
    ElemSet whole = ElemSet::full(n);
    auto subs = all_substructures(B, Kind::Subbrace);
    ElemSet out(n);
    for (int b = 0; b < n; ++b) {
        bool needed = false;
        for (const auto& S : subs) {
            if (S.bits == whole || S.bits.contains(b)) continue;
            ElemSet seed = S.bits;
            seed.add(b);
            if (subbrace_closure(B, seed) == whole) {
                needed = true;
                break;
            }
        }
        if (!needed) out.add(b);
    }
    return out;
}

SubSet centraliser(const Brace& B, const ElemSet& I,
                   std::optional<ElemSet> modulo) {
    if (!classify(B, I).is_ideal)
        throw NotAnIdeal("centraliser needs an ideal");
    ElemSet J = modulo ? *modulo : ElemSet::single(B.order(), 0);
    if (!classify(B, J).is_ideal)
        throw NotAnIdeal("centraliser modulus must be an ideal");
    if (!J.subset_of(I)) throw NotNested("modulus must sit inside the ideal");
    std::vector<ElemSet> good;
    for (const auto& K : all_substructures(B, Kind::Ideal))
        if (commutator_ideal(B, K.bits, I).bits.subset_of(J))
            good.push_back(K.bits);
    ElemSet best = good[0];
    for (const auto& g : good)
        if (best.before(g)) best = g;
    for (const auto& g : good)
        if (!g.subset_of(best))
            throw BraceError("centralising ideals have no unique maximum");
    return classify(B, best);
}

SubSet zeta_b_radical(const Brace& B) {
    auto radical_over = [&](const Series& chief) {
        ElemSet acc = ElemSet::full(B.order());
        for (size_t k = 0; k + 1 < chief.chain.size(); ++k)
            acc = acc & centraliser(B, chief.chain[k + 1].bits,
                                    chief.chain[k].bits)
                            .bits;
        return acc;
    };
    ElemSet a = radical_over(chief_series(B, false));
    ElemSet b = radical_over(chief_series(B, true));
    if (a != b)
        throw BraceError("radical depends on the chief series chosen");
    return classify(B, a);
}

GaschutzReport gaschutz_check(const Brace& B) {
    GaschutzReport r;
    r.applicable = frattini_ideal(B).bits.count() == 1;
    if (!r.applicable) return r;
    r.fitting = fitting_ideal(B).bits;
    auto ideals = all_substructures(B, Kind::Ideal);
    ElemSet acc = ElemSet::single(B.order(), 0);
    for (const auto& I : ideals) {
        if (I.bits.count() == 1) continue;
        bool minimal = true;
        for (const auto& other : ideals)
            if (other.bits.count() > 1 &&
                other.bits.proper_subset_of(I.bits)) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        if (commutator_ideal(B, I.bits, I.bits).bits.count() != 1) continue;
        acc = sum_and_product(B, acc, I.bits).bits;
    }
    r.abelian_minimal_sum = acc;
    r.equal = r.fitting == acc;
    return r;
}

namespace {

int order_in_table(const Table& t, int x) {
    int k = 1, y = x;
    while (y != 0) {
        y = t[y][x];
        ++k;
    }
    return k;
}

std::vector<int> prime_support(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_power_of(int n, int p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

SylowReport sylow(const Brace& B, std::optional<int> p) {
    SylowReport r;
    int n = B.order();
    std::vector<int> primes = p ? std::vector<int>{*p} : prime_support(n);
    bool all_good = true;
    for (int q : primes) {
        SylowComponent c;
        c.prime = q;
        int part = 1;
        {
            int m = n;
            while (m % q == 0) {
                m /= q;
                part *= q;
            }
        }
        ElemSet add_part(n), mul_part(n);
        for (int a = 0; a < n; ++a) {
            if (is_power_of(order_in_table(B.add_table(), a), q))
                add_part.add(a);
            if (is_power_of(order_in_table(B.mul_table(), a), q))
                mul_part.add(a);
        }
        // a unique Sylow subgroup means the prime-power elements already
        // form a subgroup of full p-part size
        auto is_subgroup = [&](const ElemSet& s, const Table& t) {
            if (s.count() != part) return false;
            for (int a : s.indices())
                for (int b : s.indices())
                    if (!s.contains(t[a][b])) return false;
            return true;
        };
        c.additive_subgroup = is_subgroup(add_part, B.add_table());
        c.multiplicative_subgroup = is_subgroup(mul_part, B.mul_table());
        c.same_set = add_part == mul_part;
        c.elements = add_part;
        c.ideal = c.same_set && classify(B, add_part).is_ideal;
        if (!c.additive_subgroup)
            r.failures.push_back("p=" + std::to_string(q) +
                                 ": additive p-elements are not a subgroup");
        if (!c.multiplicative_subgroup)
            r.failures.push_back(
                "p=" + std::to_string(q) +
                ": multiplicative p-elements are not a subgroup");
        if (!c.same_set)
            r.failures.push_back("p=" + std::to_string(q) +
                                 ": additive and multiplicative parts differ");
        else if (!c.ideal)
            r.failures.push_back("p=" + std::to_string(q) +
                                 ": p-part is not an ideal");
        all_good = all_good && c.additive_subgroup &&
                   c.multiplicative_subgroup && c.same_set && c.ideal;
        r.components.push_back(std::move(c));
    }
    if (all_good && !p) {
        Brace prod = trivial_brace({{0}});
        for (const auto& c : r.components)
            prod = direct_product(prod, restrict_to(B, c.elements).brace);
        r.certificate = is_isomorphic(B, prod);
        r.decomposes = r.certificate.isomorphic;
        if (!r.decomposes)
            r.failures.push_back("product of p-components is not isomorphic");
    }
    return r;
}

ProfileReport element_profiles(const Brace& B) {
    ProfileReport r;
    int n = B.order();
    for (int a = 0; a < n; ++a) {
        ElementProfile p;
        p.element = a;
        p.additive_order = order_in_table(B.add_table(), a);
        p.multiplicative_order = order_in_table(B.mul_table(), a);
        ElemSet seed(n);
        seed.add(0);
        seed.add(a);
        p.subbrace_order = subbrace_closure(B, seed).count();
        p.additive_primes = prime_support(p.additive_order);
        p.multiplicative_primes = prime_support(p.multiplicative_order);
        p.subbrace_primes = prime_support(p.subbrace_order);
        r.profiles.push_back(std::move(p));
    }
    for (const auto& p : r.profiles) {
        if (p.additive_order == n) r.additive_cyclic = true;
        if (p.multiplicative_order == n) r.multiplicative_cyclic = true;
    }
    if (n == 1) r.common_generator = 0;
    if (r.additive_cyclic && r.multiplicative_cyclic)
        for (const auto& p : r.profiles)
            if (p.additive_order == n && p.multiplicative_order == n) {
                r.common_generator = p.element;
                break;
            }
    return r;
}

}  // namespace skewbrace
