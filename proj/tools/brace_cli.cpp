#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewbrace/commutator.hpp"
#include "skewbrace/construct.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/radicals.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/subideal.hpp"
#include "skewbrace/substructure.hpp"
#include "skewbrace/verify.hpp"
#include "skewbrace/ybe.hpp"

using nlohmann::ordered_json;
using namespace skewbrace;

namespace {

ordered_json set_json(const ElemSet& s) {
    ordered_json a = ordered_json::array();
    for (int i : s.indices()) a.push_back(i);
    return a;
}

ordered_json subset_json(const SubSet& s) {
    return ordered_json{{"elements", set_json(s.bits)},
                        {"subbrace", s.is_subbrace},
                        {"left_ideal", s.is_left_ideal},
                        {"strong_left_ideal", s.is_strong_left_ideal},
                        {"ideal", s.is_ideal}};
}

ElemSet parse_set(const std::string& csv, int n) {
    ElemSet s(n);
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 0 || v >= n) throw IndexOutOfRange("set index out of range");
        s.add(v);
    }
    return s;
}

ordered_json series_json(const Series& s) {
    ordered_json chain = ordered_json::array();
    for (const auto& step : s.chain) chain.push_back(set_json(step.bits));
    ordered_json j{{"chain", chain},
                   {"stabilised", s.stabilised},
                   {"terminal", set_json(s.terminal)}};
    j["length"] = s.length ? ordered_json(*s.length) : ordered_json(nullptr);
    if (!s.factors.empty()) {
        ordered_json f = ordered_json::array();
        for (const auto& fac : s.factors)
            f.push_back({{"order", fac.order}, {"central", fac.central}});
        j["factors"] = f;
    }
    return j;
}

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite left skew brace toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, kind, set_csv, i_csv, j_csv;
    std::uint64_t seed = 9001, samples = 10000;
    int order = 0;

    auto add_common = [&](CLI::App* sub, bool needs_file = true) {
        if (needs_file) sub->add_option("file", file, "brace or cocycle JSON")
                            ->required();
        sub->add_option("--json", out_path, "write the JSON report here");
    };

    auto* c_validate = app.add_subcommand("validate", "check the brace axioms");
    add_common(c_validate);
    auto* c_analyze = app.add_subcommand("analyze", "full structure report");
    add_common(c_analyze);
    auto* c_ideals = app.add_subcommand("ideals", "substructure lattice");
    add_common(c_ideals);
    c_ideals->add_option("--kind", kind,
                         "subbrace|left_ideal|strong_left_ideal|ideal");
    auto* c_series = app.add_subcommand("series", "series of the brace");
    add_common(c_series);
    c_series->add_option("--kind", kind,
                         "upper|lower|derived|chief|b_lower|b_upper");
    c_series->add_option("--set", set_csv, "ideal for the B-central kinds");
    auto* c_comm = app.add_subcommand("commutator", "ideal commutator");
    add_common(c_comm);
    c_comm->add_option("--i", i_csv, "first ideal, comma separated")
        ->required();
    c_comm->add_option("--j", j_csv, "second ideal, comma separated")
        ->required();
    c_comm->add_option("--samples", samples, "absorbing sampler budget");
    c_comm->add_option("--seed", seed, "sampler seed");
    auto* c_sub = app.add_subcommand("subideal", "closure series of a subbrace");
    add_common(c_sub);
    c_sub->add_option("--set", set_csv, "subbrace, comma separated")
        ->required();
    auto* c_audit = app.add_subcommand("audit", "subideal audit of all subbraces");
    add_common(c_audit);
    auto* c_ybe = app.add_subcommand("ybe", "derived Yang-Baxter solution");
    add_common(c_ybe);
    auto* c_enum = app.add_subcommand("enumerate", "all braces of one order");
    c_enum->add_option("--order", order, "group order")->required();
    c_enum->add_option("--json", out_path, "write the JSON report here");
    auto* c_verify = app.add_subcommand("paper-verify", "run the claim manifest");
    c_verify->add_option("file", file, "manifest JSON")->required();
    c_verify->add_option("--json", out_path, "write the JSON report here");
    c_verify->add_option("--samples", samples, "absorbing sampler budget");
    c_verify->add_option("--seed", seed, "sampler seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_validate->parsed()) {
            Brace B = load_any_brace(file);
            auto audit = identity_audit(B);
            emit({{"name", B.name()},
                  {"order", B.order()},
                  {"valid", true},
                  {"identities_checked", audit.triples_checked},
                  {"identities_pass", audit.pass}},
                 out_path);
            return audit.pass ? 0 : 1;
        }
        if (c_analyze->parsed()) {
            Brace B = load_any_brace(file);
            ordered_json j{{"name", B.name()}, {"order", B.order()}};
            j["socle"] = set_json(distinguished_ideal(B, Distinguished::Socle).bits);
            j["fix"] = set_json(distinguished_ideal(B, Distinguished::Fix).bits);
            j["centre"] = set_json(distinguished_ideal(B, Distinguished::Centre).bits);
            j["kernel_lambda"] =
                set_json(distinguished_ideal(B, Distinguished::KernelLambda).bits);
            j["fitting"] = set_json(fitting_ideal(B).bits);
            j["frattini"] = set_json(frattini_ideal(B).bits);
            j["non_generators"] = set_json(non_generators(B));
            auto cls = nilpotency_class(B);
            j["nilpotency_class"] =
                cls ? ordered_json(*cls) : ordered_json(nullptr);
            j["soluble"] = derived_series(B).length.has_value();
            auto sy = sylow(B);
            j["sylow_decomposes"] = sy.decomposes;
            j["sylow_failures"] = sy.failures;
            auto prof = element_profiles(B);
            ordered_json ps = ordered_json::array();
            for (const auto& p : prof.profiles)
                ps.push_back({{"element", p.element},
                              {"additive_order", p.additive_order},
                              {"multiplicative_order", p.multiplicative_order},
                              {"subbrace_order", p.subbrace_order}});
            j["profiles"] = ps;
            j["common_generator"] = prof.common_generator
                                        ? ordered_json(*prof.common_generator)
                                        : ordered_json(nullptr);
            emit(j, out_path);
            return 0;
        }
        if (c_ideals->parsed()) {
            Brace B = load_any_brace(file);
            Kind k = kind == "subbrace"            ? Kind::Subbrace
                     : kind == "left_ideal"        ? Kind::LeftIdeal
                     : kind == "strong_left_ideal" ? Kind::StrongLeftIdeal
                                                   : Kind::Ideal;
            ordered_json arr = ordered_json::array();
            for (const auto& s : all_substructures(B, k))
                arr.push_back(subset_json(s));
            emit({{"kind", kind.empty() ? "ideal" : kind}, {"members", arr}},
                 out_path);
            return 0;
        }
        if (c_series->parsed()) {
            Brace B = load_any_brace(file);
            Series s = [&] {
                if (kind == "lower") return lower_central_series(B);
                if (kind == "derived") return derived_series(B);
                if (kind == "chief") return chief_series(B);
                if (kind == "b_lower" || kind == "b_upper")
                    return b_central_series(B, parse_set(set_csv, B.order()),
                                            kind == "b_upper");
                return upper_central_series(B);
            }();
            emit(series_json(s), out_path);
            return 0;
        }
        if (c_comm->parsed()) {
            Brace B = load_any_brace(file);
            ElemSet I = parse_set(i_csv, B.order());
            ElemSet J = parse_set(j_csv, B.order());
            auto com = commutator_ideal(B, I, J);
            auto plain = star_sum_is_ideal(B, I, J);
            auto sample = sample_absorbing_values(B, I, J, samples, seed);
            ordered_json j{{"commutator", set_json(com.bits)},
                           {"plain_sum", set_json(plain.sum)},
                           {"plain_sum_is_ideal", plain.is_ideal}};
            j["closure_witness"] = plain.witness
                                       ? ordered_json(*plain.witness)
                                       : ordered_json(nullptr);
            j["sampler"] = {{"values", set_json(sample.values)},
                            {"generated", sample.words_generated},
                            {"parsed", sample.words_parsed},
                            {"absorbing", sample.words_absorbing}};
            emit(j, out_path);
            return 0;
        }
        if (c_sub->parsed()) {
            Brace B = load_any_brace(file);
            ElemSet C = parse_set(set_csv, B.order());
            auto s = ideal_closure_series(B, C);
            auto idx = index_of(B, C);
            ordered_json chain = ordered_json::array();
            for (const auto& step : s.chain) chain.push_back(set_json(step));
            ordered_json j{{"chain", chain}, {"subideal", s.subideal}};
            j["defect"] = s.defect ? ordered_json(*s.defect)
                                   : ordered_json(nullptr);
            j["index"] = *idx.common_index;
            auto ir = idealiser_report(B, C);
            j["idealiser_exists"] = ir.has_maximum;
            if (ir.idealiser) j["idealiser"] = set_json(*ir.idealiser);
            auto nr = strong_left_normaliser(B, C);
            j["strong_left_normaliser"] = set_json(nr.normaliser.bits);
            j["normaliser_contains_set"] = nr.contains_subbrace;
            emit(j, out_path);
            return 0;
        }
        if (c_audit->parsed()) {
            Brace B = load_any_brace(file);
            auto a = subideal_audit(B);
            ordered_json entries = ordered_json::array();
            for (const auto& e : a.entries) {
                ordered_json ej{{"subbrace", set_json(e.subbrace)},
                                {"subideal", e.subideal}};
                ej["defect"] = e.defect ? ordered_json(*e.defect)
                                        : ordered_json(nullptr);
                entries.push_back(ej);
            }
            ordered_json j{{"entries", entries},
                           {"all_subideal", a.all_subideal},
                           {"soluble", a.soluble}};
            j["nilpotency_class"] = a.nilpotency
                                        ? ordered_json(*a.nilpotency)
                                        : ordered_json(nullptr);
            emit(j, out_path);
            return 0;
        }
        if (c_ybe->parsed()) {
            Brace B = load_any_brace(file);
            auto s = solution_from_brace(B);
            emit({{"order", s.n},
                  {"first", s.first},
                  {"second", s.second},
                  {"braid", s.braid},
                  {"nondegenerate_left", s.nondegenerate_left},
                  {"nondegenerate_right", s.nondegenerate_right}},
                 out_path);
            return s.braid ? 0 : 1;
        }
        if (c_enum->parsed()) {
            auto braces = enumerate_braces(order);
            ordered_json arr = ordered_json::array();
            for (const auto& B : braces) {
                arr.push_back({{"add", B.add_table()}, {"mul", B.mul_table()}});
            }
            emit({{"order", order},
                  {"count", (int)braces.size()},
                  {"braces", arr}},
                 out_path);
            return 0;
        }
        if (c_verify->parsed()) {
            auto report = run_manifest(file, seed, samples);
            ordered_json arr = ordered_json::array();
            for (const auto& r : report.claims) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
                if (!r.pass) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                arr.push_back({{"id", r.id},
                               {"pass", r.pass},
                               {"detail", r.detail}});
            }
            std::cout << (report.all_pass ? "all claims pass"
                                          : "claim failures present")
                      << "\n";
            if (!out_path.empty())
                emit({{"all_pass", report.all_pass}, {"claims", arr}},
                     out_path);
            return report.all_pass ? 0 : 1;
        }
    } catch (const JsonError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BraceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
