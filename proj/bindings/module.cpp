#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewbrace/commutator.hpp"
#include "skewbrace/construct.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/radicals.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/subideal.hpp"
#include "skewbrace/substructure.hpp"
#include "skewbrace/verify.hpp"
#include "skewbrace/ybe.hpp"

namespace py = pybind11;
using namespace skewbrace;

namespace {

ElemSet set_from(const Brace& B, const std::vector<int>& xs) {
    ElemSet s(B.order());
    for (int x : xs) s.add(x);
    return s;
}

py::dict subset_dict(const SubSet& s) {
    py::dict d;
    d["elements"] = s.bits.indices();
    d["subbrace"] = s.is_subbrace;
    d["left_ideal"] = s.is_left_ideal;
    d["strong_left_ideal"] = s.is_strong_left_ideal;
    d["ideal"] = s.is_ideal;
    return d;
}

py::dict series_dict(const Series& s) {
    py::dict d;
    py::list chain;
    for (const auto& t : s.chain) chain.append(t.bits.indices());
    d["chain"] = chain;
    d["stabilised"] = s.stabilised;
    d["terminal"] = s.terminal.indices();
    d["length"] = s.length ? py::cast(*s.length) : py::none();
    if (!s.factors.empty()) {
        py::list f;
        for (const auto& fac : s.factors) {
            py::dict fd;
            fd["order"] = fac.order;
            fd["central"] = fac.central;
            f.append(fd);
        }
        d["factors"] = f;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_skewbrace, m) {
    m.doc() = "finite left skew brace computations";

    py::register_exception<BraceError>(m, "BraceError");

    py::class_<Brace>(m, "Brace")
        .def_property_readonly("order", &Brace::order)
        .def_property_readonly("name", &Brace::name)
        .def("add", &Brace::add)
        .def("mul", &Brace::mul)
        .def("neg", &Brace::neg)
        .def("inv", &Brace::inv)
        .def("lam", &Brace::lambda)
        .def("star", &Brace::star)
        .def_property_readonly("add_table", &Brace::add_table)
        .def_property_readonly("mul_table", &Brace::mul_table)
        .def("to_json", [](const Brace& B) { return brace_to_json(B); })
        .def("__repr__", [](const Brace& B) {
            return "<Brace order=" + std::to_string(B.order()) + " '" +
                   B.name() + "'>";
        });

    m.def("validate", &validate_brace, py::arg("order"), py::arg("add"),
          py::arg("mul"), py::arg("name") = "");
    m.def("load", &load_any_brace, py::arg("path"));
    m.def("from_json", &brace_from_json_text, py::arg("text"));
    m.def("trivial", &trivial_brace, py::arg("group"), py::arg("name") = "");
    m.def("groups_of_order", &groups_of_order, py::arg("n"));
    m.def("enumerate_braces", &enumerate_braces, py::arg("n"),
          py::arg("up_to_iso") = true);
    m.def("is_isomorphic", [](const Brace& a, const Brace& b) {
        auto c = is_isomorphic(a, b);
        py::dict d;
        d["isomorphic"] = c.isomorphic;
        d["forward"] = c.forward;
        return d;
    });

    m.def("classify", [](const Brace& B, const std::vector<int>& xs) {
        return subset_dict(classify(B, set_from(B, xs)));
    });
    m.def("substructures", [](const Brace& B, const std::string& kind) {
        Kind k = kind == "subbrace"            ? Kind::Subbrace
                 : kind == "left_ideal"        ? Kind::LeftIdeal
                 : kind == "strong_left_ideal" ? Kind::StrongLeftIdeal
                                               : Kind::Ideal;
        py::list out;
        for (const auto& s : all_substructures(B, k)) out.append(subset_dict(s));
        return out;
    });
    m.def("subbrace_closure", [](const Brace& B, const std::vector<int>& xs) {
        return subbrace_closure(B, set_from(B, xs)).indices();
    });
    m.def("ideal_closure", [](const Brace& B, const std::vector<int>& xs) {
        return ideal_closure(B, set_from(B, xs)).indices();
    });
    m.def("socle", [](const Brace& B) { return socle_set(B).indices(); });
    m.def("fix", [](const Brace& B) { return fix_set(B).indices(); });
    m.def("centre", [](const Brace& B) { return centre_set(B).indices(); });
    m.def("kernel_lambda",
          [](const Brace& B) { return kernel_lambda_set(B).indices(); });

    m.def("star_span",
          [](const Brace& B, const std::vector<int>& x,
             const std::vector<int>& y) {
              return star_span(B, set_from(B, x), set_from(B, y)).bits.indices();
          });
    m.def("commutator",
          [](const Brace& B, const std::vector<int>& i,
             const std::vector<int>& j) {
              return commutator_ideal(B, set_from(B, i), set_from(B, j))
                  .bits.indices();
          });

    m.def("upper_central_series",
          [](const Brace& B) { return series_dict(upper_central_series(B)); });
    m.def("lower_central_series",
          [](const Brace& B) { return series_dict(lower_central_series(B)); });
    m.def("derived_series",
          [](const Brace& B) { return series_dict(derived_series(B)); });
    m.def("chief_series", [](const Brace& B, bool reverse) {
        return series_dict(chief_series(B, reverse));
    }, py::arg("brace"), py::arg("reverse") = false);
    m.def("nilpotency_class", [](const Brace& B) -> py::object {
        auto c = nilpotency_class(B);
        return c ? py::cast(*c) : py::none();
    });

    m.def("fitting", [](const Brace& B) {
        return fitting_ideal(B).bits.indices();
    });
    m.def("frattini", [](const Brace& B) {
        return frattini_ideal(B).bits.indices();
    });
    m.def("sylow", [](const Brace& B) {
        auto rep = sylow(B);
        py::dict d;
        d["decomposes"] = rep.decomposes;
        py::list comps;
        for (const auto& comp : rep.components) {
            py::dict cd;
            cd["prime"] = comp.prime;
            cd["elements"] = comp.elements.indices();
            cd["ideal"] = comp.ideal;
            comps.append(cd);
        }
        d["components"] = comps;
        d["failures"] = rep.failures;
        return d;
    });

    m.def("subideal_series", [](const Brace& B, const std::vector<int>& xs) {
        auto s = ideal_closure_series(B, set_from(B, xs));
        py::dict d;
        py::list chain;
        for (const auto& t : s.chain) chain.append(t.indices());
        d["chain"] = chain;
        d["subideal"] = s.subideal;
        d["defect"] = s.defect ? py::cast(*s.defect) : py::none();
        return d;
    });
    m.def("idealiser", [](const Brace& B, const std::vector<int>& xs) {
        auto rep = idealiser_report(B, set_from(B, xs));
        py::dict d;
        d["has_maximum"] = rep.has_maximum;
        d["idealiser"] =
            rep.idealiser ? py::cast(rep.idealiser->indices()) : py::none();
        return d;
    });

    m.def("ybe_solution", [](const Brace& B) {
        auto sol = solution_from_brace(B);
        py::dict d;
        d["first"] = sol.first;
        d["second"] = sol.second;
        d["braid"] = sol.braid;
        d["nondegenerate"] =
            sol.nondegenerate_left && sol.nondegenerate_right;
        return d;
    });

    m.def("run_manifest", [](const std::string& path) {
        auto rep = run_manifest(path);
        py::dict d;
        d["all_pass"] = rep.all_pass;
        py::list claims;
        for (const auto& c : rep.claims) {
            py::dict cd;
            cd["id"] = c.id;
            cd["pass"] = c.pass;
            cd["detail"] = c.detail;
            claims.append(cd);
        }
        d["claims"] = claims;
        return d;
    });
}
