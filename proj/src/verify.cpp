#include "skewbrace/verify.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "skewbrace/commutator.hpp"
#include "skewbrace/construct.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/radicals.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/subideal.hpp"
#include "skewbrace/substructure.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace {

namespace {

using nlohmann::json;

ElemSet set_from(const json& arr, int n) {
    ElemSet s(n);
    for (const auto& v : arr) s.add(v.get<int>());
    return s;
}

std::string show(const ElemSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

// per-check failure accumulator; pass iff no messages
struct Check {
    std::vector<std::string> errors;
    void expect(bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    }
    void set_eq(const ElemSet& got, const ElemSet& want,
                const std::string& what) {
        if (got != want)
            errors.push_back(what + ": expected " + show(want) + " got " +
                             show(got));
    }
};

int lcm_order(const Brace& B, int a) {
    auto order_in = [&](const Table& t) {
        int k = 1, y = a;
        while (y != 0) {
            y = t[y][a];
            ++k;
        }
        return k;
    };
    return std::lcm(order_in(B.add_table()), order_in(B.mul_table()));
}

// order of a as an element of the quotient by z, measured through proj
int lcm_order_mod(const Brace& B, const std::vector<int>& proj,
                  const Brace& Q, int a) {
    return lcm_order(Q, proj[a]);
}

bool divides_power(int d, int base, long long exp2) {
    // d | base^(2^exp2)?  checked prime by prime on valuations
    for (int p = 2; p <= d; ++p) {
        if (d % p) continue;
        int vd = 0;
        while (d % p == 0) {
            d /= p;
            ++vd;
        }
        int vb = 0, b = base;
        while (b % p == 0) {
            b /= p;
            ++vb;
        }
        if (vb == 0) return false;
        long long budget = (long long)vb << std::min(exp2, 40LL);
        if (vd > budget) return false;
    }
    return true;
}

void check_series_laws(const Brace& B, Check& c) {
    int n = B.order();
    auto cls = nilpotency_class(B);  // throws if the dual routes disagree
    Series up = upper_central_series(B);
    Series lo = lower_central_series(B);
    Series der = derived_series(B);
    auto at = [](const std::vector<SubSet>& ch, size_t k) -> const ElemSet& {
        return ch[std::min(k, ch.size() - 1)].bits;
    };
    for (size_t k = 0; k < der.chain.size(); ++k)
        c.expect(der.chain[k].bits.subset_of(at(lo.chain, k)),
                 "derived term escapes the lower central term");
    auto zadd = group_upper_central_series(B.add_table());
    auto zmul = group_upper_central_series(B.mul_table());
    auto gat = [](const std::vector<ElemSet>& ch, size_t k) -> const ElemSet& {
        return ch[std::min(k, ch.size() - 1)];
    };
    for (size_t k = 0; k < up.chain.size(); ++k) {
        c.expect(up.chain[k].bits.subset_of(gat(zadd, k)),
                 "brace centre escapes the additive group centre");
        c.expect(up.chain[k].bits.subset_of(gat(zmul, k)),
                 "brace centre escapes the multiplicative group centre");
    }
    if (up.chain.size() >= 3 &&
        up.chain[2].bits.count() > up.chain[1].bits.count()) {
        ElemSet whole = ElemSet::full(n);
        bool add_proper =
            additive_commutator_span(B, whole, whole, false).bits.count() < n;
        bool mul_proper =
            additive_commutator_span(B, whole, whole, true).bits.count() < n;
        c.expect(add_proper || mul_proper,
                 "second centre grows but both commutator subgroups are full");
    }
    for (bool rev : {false, true}) {
        Series chief = chief_series(B, rev);
        bool all_central = true;
        for (const auto& f : chief.factors) all_central &= f.central;
        c.expect(all_central == cls.has_value(),
                 "chief-factor centrality disagrees with nilpotency");
    }
    if (cls) {
        c.expect((int)der.chain.size() - 1 <= *cls,
                 "derived length exceeds the class");
        auto rep = b_central_report(B, ElemSet::full(n));
        c.expect(rep.nilpotent && rep.cls == cls,
                 "whole-brace B-central class disagrees with the class");
        // exponent growth bound along the ascending series
        int e = 1;
        for (int a : up.chain[std::min<size_t>(1, up.chain.size() - 1)]
                         .bits.indices())
            e = std::lcm(e, lcm_order(B, a));
        for (size_t i = 0; i + 1 < up.chain.size(); ++i) {
            auto q = quotient(B, up.chain[i].bits);
            for (int a : up.chain[i + 1].bits.indices())
                c.expect(divides_power(lcm_order_mod(B, q.projection, q.brace, a),
                                       e, (long long)i),
                         "central factor exponent exceeds the bound");
        }
    }
    // primes absent from the centre never appear higher up the series
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        bool centre_has = false;
        for (int a : up.chain[std::min<size_t>(1, up.chain.size() - 1)]
                         .bits.indices())
            if (lcm_order(B, a) % p == 0) centre_has = true;
        if (centre_has) continue;
        for (size_t i = 0; i + 1 < up.chain.size(); ++i) {
            auto q = quotient(B, up.chain[i].bits);
            for (int a : up.chain[i + 1].bits.indices())
                c.expect(lcm_order_mod(B, q.projection, q.brace, a) % p != 0,
                         "hypercentre picked up a prime missing from the centre");
        }
    }
}

void check_commutator_pairs(const Brace& B, Check& c) {
    auto ideals = all_substructures(B, Kind::Ideal);
    int m = ideals.size();
    std::vector<std::vector<ElemSet>> com(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            com[i].push_back(
                commutator_ideal(B, ideals[i].bits, ideals[j].bits).bits);
    auto index_of_set = [&](const ElemSet& s) {
        for (int i = 0; i < m; ++i)
            if (ideals[i].bits == s) return i;
        return -1;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                ElemSet jk = sum_and_product(B, ideals[j].bits, ideals[k].bits)
                                 .bits;
                int q = index_of_set(jk);
                c.expect(q >= 0, "ideal sum left the ideal lattice");
                if (q < 0) continue;
                ElemSet rhs = sum_and_product(B, com[i][j], com[i][k]).bits;
                c.expect(com[i][q] == rhs,
                         "commutator fails to distribute over the ideal sum");
            }
    // star-span containment characterises left ideals
    ElemSet whole = ElemSet::full(B.order());
    for (const auto& S : all_substructures(B, Kind::Subbrace)) {
        bool contained = star_span(B, whole, S.bits).bits.subset_of(S.bits);
        c.expect(contained == S.is_left_ideal,
                 "star-span containment disagrees with the left-ideal flag");
    }
}

void check_fitting_suite(const Brace& B, Check& c) {
    ElemSet fit = fitting_ideal(B).bits;
    ElemSet frat = frattini_ideal(B).bits;
    for (const auto& L : maximal_left_ideals(B))
        c.expect(classify(B, L.bits & fit).is_ideal,
                 "maximal left ideal meets the Fitting ideal badly");
    c.set_eq(zeta_b_radical(B).bits, fit,
             "chief-factor centraliser route to the Fitting ideal");
    auto ideals = all_substructures(B, Kind::Ideal);
    std::vector<std::optional<int>> bcls;
    for (const auto& I : ideals) {
        auto rep = b_central_report(B, I.bits);
        bcls.push_back(rep.nilpotent ? rep.cls : std::nullopt);
    }
    for (size_t i = 0; i < ideals.size(); ++i)
        for (size_t j = 0; j < ideals.size(); ++j) {
            if (!bcls[i] || !bcls[j]) continue;
            ElemSet sum =
                sum_and_product(B, ideals[i].bits, ideals[j].bits).bits;
            auto rep = b_central_report(B, sum);
            c.expect(rep.nilpotent && *rep.cls <= *bcls[i] + *bcls[j],
                     "sum of nilpotent ideals breaks the class bound");
        }
    for (const auto& I : ideals) {
        auto q = quotient(B, I.bits);
        ElemSet img(q.brace.order());
        for (int a : fit.indices()) img.add(q.projection[a]);
        c.expect(img.subset_of(fitting_ideal(q.brace).bits),
                 "Fitting image escapes the quotient Fitting ideal");
    }
    bool soluble = derived_series(B).length.has_value();
    ElemSet cent = centraliser(B, fit).bits;
    if (soluble) {
        // the centre of F contributes through the largest ideal of B it
        // contains, matching how the ascending B-central step is taken
        auto r = restrict_to(B, fit);
        ElemSet zf(B.order());
        for (int i : centre_set(r.brace).indices()) zf.add(r.elements[i]);
        c.set_eq(cent, core_of(B, zf).bits,
                 "centraliser of the Fitting ideal");
    }
    {
        // (C(F)+F)/F carries no non-zero ideal soluble relative to B/F
        auto q = quotient(B, fit);
        ElemSet cf = sum_and_product(B, cent, fit).bits;
        ElemSet img(q.brace.order());
        for (int a : cf.indices()) img.add(q.projection[a]);
        for (const auto& J : all_substructures(q.brace, Kind::Ideal)) {
            if (J.bits.count() == 1 || !J.bits.subset_of(img)) continue;
            c.expect(!derived_series(q.brace, J.bits).length.has_value(),
                     "soluble ideal hides above the Fitting ideal");
        }
    }
    auto cls = nilpotency_class(B);
    if (cls) {
        c.set_eq(non_generators(B), frat, "non-generators");
        for (const auto& p : element_profiles(B).profiles)
            c.expect(p.additive_primes == p.multiplicative_primes,
                     "element order prime supports differ");
    }
    auto g = gaschutz_check(B);
    if (g.applicable)
        c.set_eq(g.abelian_minimal_sum, g.fitting,
                 "abelian minimal ideal sum");
}

void check_absorbing(const Brace& B, Check& c, std::uint64_t samples,
                     std::uint64_t seed) {
    auto ideals = all_substructures(B, Kind::Ideal);
    auto words = sample_absorbing_words(B, samples, seed);
    c.expect(words.words_absorbing >= samples,
             "sampler fell short of the requested absorbing word count");
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            ElemSet values = evaluate_words_over(B, words.words, I.bits, J.bits);
            ElemSet com = commutator_ideal(B, I.bits, J.bits).bits;
            c.expect(values.subset_of(com),
                     "sampled absorbing value outside the commutator");
            c.set_eq(ideal_closure(B, values), com,
                     "closure of the sampled values");
            if (I.bits.count() == 1)
                c.expect(values.count() == 1,
                         "zero ideal produced non-zero absorbing values");
        }
}

void run_claim(const Brace& B, const json& claim, std::uint64_t seed,
               std::uint64_t samples, Check& c) {
    const std::string op = claim.at("op").get<std::string>();
    int n = B.order();
    auto lattice_eq = [&](Kind kind, const json& expect) {
        auto got = all_substructures(B, kind);
        c.expect(got.size() == expect.size(), "lattice size mismatch");
        for (size_t i = 0; i < got.size() && i < expect.size(); ++i)
            c.set_eq(got[i].bits, set_from(expect[i], n), "lattice member");
    };
    if (op == "validate") {
        // construction already ran validate_brace; re-run explicitly
        validate_brace(n, B.add_table(), B.mul_table(), B.name());
    } else if (op == "identity_audit") {
        auto a = identity_audit(B);
        c.expect(a.pass, "identity audit found a failing triple");
    } else if (op == "commutator_theorem_pairs") {
        check_commutator_pairs(B, c);
    } else if (op == "series_laws") {
        check_series_laws(B, c);
    } else if (op == "fitting_suite") {
        check_fitting_suite(B, c);
    } else if (op == "ybe") {
        auto s = solution_from_brace(B);
        c.expect(s.braid, "braid relation fails");
        c.expect(s.nondegenerate_left && s.nondegenerate_right,
                 "solution is degenerate");
    } else if (op == "ideal_lattice_eq") {
        lattice_eq(Kind::Ideal, claim.at("expect"));
    } else if (op == "subbrace_lattice_eq") {
        lattice_eq(Kind::Subbrace, claim.at("expect"));
    } else if (op == "left_ideal_flags_eq") {
        std::vector<ElemSet> got;
        for (const auto& S : all_substructures(B, Kind::LeftIdeal))
            if (S.bits.count() > 1 && S.bits.count() < n)
                got.push_back(S.bits);
        const auto& expect = claim.at("expect");
        c.expect(got.size() == expect.size(), "left-ideal count mismatch");
        for (size_t i = 0; i < got.size() && i < expect.size(); ++i)
            c.set_eq(got[i], set_from(expect[i], n), "left ideal");
    } else if (op == "maximal_subbraces_eq") {
        auto got = extremal(B, Kind::Subbrace, true);
        const auto& expect = claim.at("expect");
        c.expect(got.size() == expect.size(), "maximal subbrace count");
        for (size_t i = 0; i < got.size() && i < expect.size(); ++i)
            c.set_eq(got[i].bits, set_from(expect[i], n), "maximal subbrace");
    } else if (op == "distinguished_eq") {
        const std::string which = claim.at("which").get<std::string>();
        Distinguished d = which == "socle"    ? Distinguished::Socle
                          : which == "fix"    ? Distinguished::Fix
                          : which == "centre" ? Distinguished::Centre
                                              : Distinguished::KernelLambda;
        c.set_eq(distinguished_ideal(B, d).bits,
                 set_from(claim.at("expect"), n), which);
    } else if (op == "nilpotency_class") {
        auto cls = nilpotency_class(B);
        if (claim.at("expect").is_null())
            c.expect(!cls, "unexpected central nilpotency");
        else
            c.expect(cls && *cls == claim.at("expect").get<int>(),
                     "nilpotency class mismatch");
    } else if (op == "fit_eq") {
        c.set_eq(fitting_ideal(B).bits, set_from(claim.at("expect"), n),
                 "Fitting ideal");
    } else if (op == "frat_eq") {
        c.set_eq(frattini_ideal(B).bits, set_from(claim.at("expect"), n),
                 "Frattini ideal");
    } else if (op == "zeta_b_radical_eq") {
        c.set_eq(zeta_b_radical(B).bits, set_from(claim.at("expect"), n),
                 "radical");
    } else if (op == "sylow") {
        c.expect(sylow(B).decomposes == claim.at("expect").get<bool>(),
                 "Sylow decomposition verdict");
    } else if (op == "absorbing_sample") {
        check_absorbing(B, c, samples, seed);
    } else if (op == "classify_eq") {
        SubSet s = classify(B, set_from(claim.at("set"), n));
        c.expect(s.is_subbrace == claim.at("subbrace").get<bool>() &&
                     s.is_left_ideal == claim.at("left_ideal").get<bool>() &&
                     s.is_strong_left_ideal ==
                         claim.at("strong_left_ideal").get<bool>() &&
                     s.is_ideal == claim.at("ideal").get<bool>(),
                 "classification flags mismatch");
    } else if (op == "star_span_eq") {
        c.set_eq(star_span(B, set_from(claim.at("x"), n),
                           set_from(claim.at("y"), n))
                     .bits,
                 set_from(claim.at("expect"), n), "star span");
    } else if (op == "star_sum_is_ideal") {
        auto r = star_sum_is_ideal(B, set_from(claim.at("i"), n),
                                   set_from(claim.at("j"), n));
        c.expect(r.is_ideal == claim.at("expect").get<bool>(),
                 "plain-sum ideal verdict");
        if (!r.is_ideal)
            c.expect(r.witness.has_value(), "missing closure witness");
    } else if (op == "commutator_eq") {
        c.set_eq(commutator_ideal(B, set_from(claim.at("i"), n),
                                  set_from(claim.at("j"), n))
                     .bits,
                 set_from(claim.at("expect"), n), "commutator ideal");
    } else if (op == "absorbing_closure_eq") {
        auto s = sample_absorbing_values(B, set_from(claim.at("i"), n),
                                         set_from(claim.at("j"), n), samples,
                                         seed);
        c.set_eq(ideal_closure(B, s.values), set_from(claim.at("expect"), n),
                 "absorbing value closure");
    } else if (op == "all_subbraces_subideal") {
        c.expect(subideal_audit(B).all_subideal ==
                     claim.at("expect").get<bool>(),
                 "subideal audit verdict");
    } else if (op == "ideal_of_restriction") {
        auto r = restrict_to(B, set_from(claim.at("outer"), n));
        std::vector<int> local(n, -1);
        for (size_t i = 0; i < r.elements.size(); ++i)
            local[r.elements[i]] = i;
        ElemSet img(r.brace.order());
        for (int a : set_from(claim.at("inner"), n).indices())
            img.add(local[a]);
        c.expect(classify(r.brace, img).is_ideal ==
                     claim.at("expect").get<bool>(),
                 "restricted ideal verdict");
    } else if (op == "subbrace_closure_eq") {
        c.set_eq(subbrace_closure(B, set_from(claim.at("e"), n)),
                 set_from(claim.at("expect"), n), "generated subbrace");
    } else if (op == "idealiser_no_max") {
        auto r = idealiser_report(B, set_from(claim.at("set"), n));
        c.expect(!r.has_maximum, "idealiser unexpectedly exists");
        auto in_admitting = [&](const ElemSet& s) {
            for (const auto& a : r.admitting)
                if (a == s) return true;
            return false;
        };
        c.expect(in_admitting(set_from(claim.at("w1"), n)) &&
                     in_admitting(set_from(claim.at("w2"), n)),
                 "expected admitting subbraces missing");
        c.expect(r.obstruction.has_value(), "missing join obstruction");
    } else if (op == "standalone_class_le") {
        auto r = restrict_to(B, set_from(claim.at("set"), n));
        auto cls = nilpotency_class(r.brace);
        if (claim.at("bound").is_null())
            c.expect(!cls, "restricted brace is unexpectedly nilpotent");
        else
            c.expect(cls && *cls <= claim.at("bound").get<int>(),
                     "restricted class bound fails");
    } else if (op == "sum_eq") {
        c.set_eq(sum_and_product(B, set_from(claim.at("i"), n),
                                 set_from(claim.at("j"), n))
                     .bits,
                 set_from(claim.at("expect"), n), "ideal sum");
    } else if (op == "quotient_trivial") {
        auto q = quotient(B, set_from(claim.at("by"), n));
        ElemSet whole = ElemSet::full(q.brace.order());
        bool abelian =
            commutator_ideal(q.brace, whole, whole).bits.count() == 1;
        c.expect(abelian == claim.at("expect").get<bool>(),
                 "quotient abelian verdict");
    } else if (op == "ideals_of_order_eq") {
        int want = claim.at("order").get<int>();
        std::vector<ElemSet> got;
        for (const auto& I : all_substructures(B, Kind::Ideal))
            if (I.bits.count() == want) got.push_back(I.bits);
        const auto& expect = claim.at("expect");
        c.expect(got.size() == expect.size(), "ideal count at given order");
        for (size_t i = 0; i < got.size() && i < expect.size(); ++i)
            c.set_eq(got[i], set_from(expect[i], n), "ideal of given order");
    } else if (op == "standalone_socle_eq") {
        auto r = restrict_to(B, set_from(claim.at("set"), n));
        ElemSet soc(n);
        for (int i : socle_set(r.brace).indices()) soc.add(r.elements[i]);
        c.set_eq(soc, set_from(claim.at("expect"), n), "restricted socle");
    } else if (op == "subideal_defect") {
        auto s = ideal_closure_series(B, set_from(claim.at("set"), n));
        c.expect(s.subideal && s.defect &&
                     *s.defect == claim.at("expect").get<int>(),
                 "closure series defect mismatch");
    } else if (op == "no_nilpotent_ideal_contains") {
        ElemSet set = set_from(claim.at("set"), n);
        bool none = true;
        for (const auto& K : all_substructures(B, Kind::Ideal)) {
            if (!set.subset_of(K.bits)) continue;
            if (nilpotency_class(restrict_to(B, K.bits).brace)) none = false;
        }
        c.expect(none == claim.at("expect").get<bool>(),
                 "nilpotent covering ideal verdict");
    } else if (op == "derived_terminal_eq") {
        c.set_eq(derived_series(B).terminal, set_from(claim.at("expect"), n),
                 "derived terminal");
    } else {
        c.expect(false, "unknown claim op " + op);
    }
}

void run_global_claim(const json& claim, Check& c) {
    const std::string op = claim.at("op").get<std::string>();
    if (op == "enum_order6_fit_frat") {
        // some order-6 brace has Fit = Frat of order 3, the unique
        // non-zero proper left ideal
        bool found = false;
        for (const auto& B : enumerate_braces(6)) {
            ElemSet fit = fitting_ideal(B).bits;
            ElemSet frat = frattini_ideal(B).bits;
            if (fit != frat || fit.count() != 3) continue;
            std::vector<ElemSet> proper;
            for (const auto& L : all_substructures(B, Kind::LeftIdeal))
                if (L.bits.count() > 1 && L.bits.count() < 6)
                    proper.push_back(L.bits);
            if (proper.size() == 1 && proper[0] == fit) found = true;
        }
        c.expect(found, "no order-6 brace matches the Fit=Frat pattern");
    } else if (op == "gaschutz_enum") {
        int max = claim.at("max_order").get<int>();
        for (int m = 1; m <= max; ++m)
            for (const auto& B : enumerate_braces(m)) {
                auto g = gaschutz_check(B);
                if (g.applicable)
                    c.expect(g.equal, "abelian minimal sum misses Fitting at order " +
                                          std::to_string(m));
                auto prof = element_profiles(B);
                if (prof.additive_cyclic && prof.multiplicative_cyclic)
                    c.expect(prof.common_generator.has_value(),
                             "cyclic groups lack a common generator at order " +
                                 std::to_string(m));
            }
    } else if (op == "ybe_enum") {
        int max = claim.at("max_order").get<int>();
        for (int m = 1; m <= max; ++m)
            for (const auto& B : enumerate_braces(m)) {
                auto s = solution_from_brace(B);
                c.expect(s.braid && s.nondegenerate_left &&
                             s.nondegenerate_right,
                         "derived solution fails at order " +
                             std::to_string(m));
            }
    } else {
        c.expect(false, "unknown global op " + op);
    }
}

}  // namespace

VerifyReport run_manifest(const std::string& manifest_path,
                          std::optional<std::uint64_t> seed,
                          std::optional<std::uint64_t> samples) {
    VerifyReport report;
    std::ifstream in(manifest_path);
    if (!in) throw JsonError("cannot open " + manifest_path);
    json manifest = json::parse(in, nullptr, false);
    if (manifest.is_discarded()) throw JsonError("malformed manifest");
    std::uint64_t the_seed = seed.value_or(manifest.value("seed", 0ULL));
    std::uint64_t the_samples =
        samples.value_or(manifest.value("samples", 1000ULL));
    std::string dir;
    if (auto pos = manifest_path.find_last_of('/'); pos != std::string::npos)
        dir = manifest_path.substr(0, pos + 1);
    for (const auto& fixture : manifest.at("fixtures")) {
        std::string id = fixture.at("id").get<std::string>();
        std::optional<Brace> B;
        std::string load_error;
        try {
            B = from_cocycle(
                load_cocycle_file(dir + fixture.at("file").get<std::string>()));
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (const auto& claim : fixture.at("claims")) {
            ClaimResult r;
            r.id = claim.at("id").get<std::string>();
            if (!B) {
                r.pass = false;
                r.detail = "fixture failed to load: " + load_error;
            } else {
                Check c;
                try {
                    run_claim(*B, claim, the_seed, the_samples, c);
                } catch (const std::exception& e) {
                    c.errors.push_back(e.what());
                }
                r.pass = c.errors.empty();
                for (const auto& e : c.errors) {
                    if (!r.detail.empty()) r.detail += "; ";
                    r.detail += e;
                }
            }
            report.claims.push_back(std::move(r));
        }
    }
    for (const auto& claim : manifest.value("global_claims", json::array())) {
        ClaimResult r;
        r.id = claim.at("id").get<std::string>();
        Check c;
        try {
            run_global_claim(claim, c);
        } catch (const std::exception& e) {
            c.errors.push_back(e.what());
        }
        r.pass = c.errors.empty();
        for (const auto& e : c.errors) {
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += e;
        }
        report.claims.push_back(std::move(r));
    }
    report.all_pass = true;
    for (const auto& r : report.claims) report.all_pass &= r.pass;
    return report;
}

}  // namespace skewbrace
