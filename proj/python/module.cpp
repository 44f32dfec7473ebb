#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bohrcolor/bohr.hpp"
#include "bohrcolor/coloring.hpp"
#include "bohrcolor/config.hpp"
#include "bohrcolor/construction.hpp"
#include "bohrcolor/genpoly.hpp"
#include "bohrcolor/projection.hpp"
#include "bohrcolor/verify.hpp"

namespace py = pybind11;
using namespace bohrcolor;

PYBIND11_MODULE(_bohrcolor, m) {
    m.doc() = "Torus-set coloring toolkit bindings";
    m.attr("UNBOUNDED") = kUnbounded;

    py::class_<Params>(m, "Params")
        .def(py::init([](double d1, double d2, std::uint64_t mm, double eta, double tol) {
                 return Params{d1, d2, mm, eta, tol};
             }),
             py::arg("delta1") = 0.1, py::arg("delta2") = 1e-4,
             py::arg("m") = kUnbounded, py::arg("eta") = 0.0, py::arg("tol") = kSlack)
        .def_readwrite("delta1", &Params::delta1)
        .def_readwrite("delta2", &Params::delta2)
        .def_readwrite("m", &Params::m)
        .def_readwrite("eta", &Params::eta)
        .def_readwrite("tol", &Params::tol)
        .def("width", &Params::width)
        .def("ratio", &Params::ratio);

    py::class_<ParamReport>(m, "ParamReport")
        .def_readonly("ok", &ParamReport::ok)
        .def_readonly("failed_clauses", &ParamReport::failed_clauses)
        .def_readonly("lower_margin", &ParamReport::lower_margin)
        .def_readonly("upper_margin", &ParamReport::upper_margin);

    py::class_<SparsePoint>(m, "SparsePoint")
        .def_static("from_pairs",
                    [](std::vector<std::pair<std::uint64_t, double>> pairs, std::uint64_t m) {
                        std::vector<SparsePoint::Entry> e;
                        for (auto& [i, v] : pairs) e.push_back({i, v});
                        return SparsePoint::from_pairs(std::move(e), m);
                    },
                    py::arg("pairs"), py::arg("ambient") = kUnbounded)
        .def("pairs", [](const SparsePoint& x) { return x.entries(); })
        .def_property_readonly("ambient", &SparsePoint::ambient)
        .def("l1_norm", [](const SparsePoint& x) { return l1_norm(x); })
        .def("add", [](const SparsePoint& x, const SparsePoint& y) { return add(x, y); })
        .def("negate", [](const SparsePoint& x) { return negate(x); })
        .def("sub", [](const SparsePoint& x, const SparsePoint& y) { return sub(x, y); });

    py::class_<MembershipCertificate>(m, "MembershipCertificate")
        .def_readonly("is_member", &MembershipCertificate::is_member)
        .def_readonly("special_index", &MembershipCertificate::special_index)
        .def_readonly("tail_sum", &MembershipCertificate::tail_sum)
        .def_readonly("margin1", &MembershipCertificate::margin1)
        .def_readonly("margin2", &MembershipCertificate::margin2)
        .def_readonly("margin3", &MembershipCertificate::margin3)
        .def("min_margin", &MembershipCertificate::min_margin);

    py::class_<AlphaSchedule>(m, "AlphaSchedule")
        .def_property_readonly("m", &AlphaSchedule::m)
        .def("alpha", &AlphaSchedule::alpha)
        .def("tail_bound", &AlphaSchedule::tail_bound)
        .def("fingerprint", &AlphaSchedule::fingerprint);

    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("params", &RunConfig::params)
        .def_readonly("torus_params", &RunConfig::torus_params)
        .def_readonly("seed", &RunConfig::seed)
        .def("validate", &RunConfig::validate);

    m.def("frac", &frac);
    m.def("rz_norm", &rz_norm_of);
    m.def("validate_params", &validate_params, py::arg("delta1"), py::arg("delta2"),
          py::arg("tol") = kSlack);
    m.def("is_member", &is_member, py::arg("x"), py::arg("params"), py::arg("guard") = 0.0);
    m.def("canonical_member", &canonical_member, py::arg("params"), py::arg("anchor") = 1);
    m.def("sample_member", &sample_member);
    m.def("functional_f", &functional_f);
    m.def("color_of", [](const SparsePoint& x, const Params& p) {
        ColorResult c = color_of(x, p);
        return py::make_tuple(c.id.cell, c.fragile);
    });
    m.def("second_difference", &second_difference);
    m.def("eval_genpoly",
          [](std::vector<std::pair<std::uint32_t, double>> terms, std::uint64_t n) {
              SpecialGenPoly P;
              for (auto& [j, a] : terms) P.terms.push_back({j, a});
              return eval(P, n);
          });
    m.def("load_config", &load_config);
    m.def("make_schedule",
          [](const RunConfig& cfg, std::uint64_t m_override) {
              return make_schedule(cfg.schedule, m_override);
          },
          py::arg("config"), py::arg("m_override") = 0);
    m.def("project", &project);
    m.def("enumerate_members",
          [](std::uint64_t N, const Params& p, const AlphaSchedule& s, unsigned workers) {
              auto rep = enumerate_members(N, p, s, workers);
              std::vector<std::pair<std::uint64_t, double>> out;
              for (const auto& e : rep.elements) out.emplace_back(e.n, e.margin);
              return out;
          },
          py::arg("N"), py::arg("params"), py::arg("schedule"), py::arg("workers") = 1);
    m.def("color_integer", [](std::uint64_t n, const Params& p, const AlphaSchedule& s) {
        ColorResult c = color_integer(n, p, s);
        return py::make_tuple(c.id.cell, c.fragile);
    });
    m.def("build_witness",
          [](std::vector<std::vector<long long>> dual, double epsilon, const Params& p) {
              TorusBohrSet B{std::move(dual), epsilon};
              B.validate();
              WitnessReport w = build_witness(B, p);
              return py::make_tuple(w.witness, w.sup_norm, w.cluster);
          });
}
