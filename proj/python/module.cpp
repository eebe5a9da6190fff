#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "czlattice/lattice.hpp"
#include "czlattice/relcheck.hpp"
#include "czlattice/spectra.hpp"

namespace py = pybind11;
using namespace czlattice;

namespace {

py::dict report_to_dict(const Report& rep) {
    py::dict d;
    d["suite"] = rep.suite;
    d["N"] = rep.N;
    d["q_exponent"] = py::make_tuple(rep.q_exponent_s, rep.q_exponent_M);
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict jc;
        jc["name"] = c.name;
        jc["params"] = c.params;
        jc["residual"] = c.residual;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        checks.append(jc);
    }
    d["checks"] = checks;
    d["all_pass"] = rep.all_pass();
    return d;
}

} // namespace

PYBIND11_MODULE(_czlattice, m) {
    m.doc() = "Deformed Virasoro / magnetic-translation algebra workbench";

    py::register_exception<Error>(m, "CzlatticeError");

    m.def("suite_names", [] {
        std::vector<std::string> names;
        for (const auto& s : builtin_suites()) names.push_back(s.name);
        return names;
    });

    m.def(
        "run_suite",
        [](const std::string& name, int N, int P, int Q, double b, bool mutated) {
            const SuiteDef* def = find_suite(name);
            if (!def) throw UnknownName("unknown suite " + name);
            SuiteConfig cfg;
            cfg.N = N;
            cfg.flux = FluxRatio(P, Q);
            cfg.b = b;
            return report_to_dict(czlattice::run_suite(*def, cfg, mutated));
        },
        py::arg("name"), py::arg("N") = 7, py::arg("P") = 1, py::arg("Q") = 3,
        py::arg("b") = 0.0, py::arg("mutated") = false);

    m.def(
        "chain_spectrum",
        [](int P, int Q, const std::string& kind, int n, int k) {
            HamiltonianSpec spec{FluxRatio(P, Q)};
            if (kind == "H") spec.kind = HamiltonianKind::H;
            else if (kind == "Hprime") spec.kind = HamiltonianKind::Hprime;
            else if (kind == "Hn") spec.kind = HamiltonianKind::Hn;
            else if (kind == "Hcheck") spec.kind = HamiltonianKind::Hcheck;
            else if (kind == "Hnk") spec.kind = HamiltonianKind::Hnk;
            else throw Error("unknown Hamiltonian kind " + kind);
            spec.n = n;
            spec.k = k;
            return spectrum(build_hamiltonian(spec));
        },
        py::arg("P"), py::arg("Q"), py::arg("kind") = "H", py::arg("n") = 1, py::arg("k") = 1);

    m.def(
        "butterfly",
        [](int Qmax, int jobs) {
            std::vector<std::tuple<int, int, int, double>> rows;
            for (const auto& r : butterfly_sweep(Qmax, jobs))
                rows.emplace_back(r.phi_num, r.phi_den, r.index, r.energy);
            return rows;
        },
        py::arg("Qmax"), py::arg("jobs") = 1);

    m.def("verify_lattice", [](int P, int Q) {
        return report_to_dict(verify_dmt_algebra(LatticeSpec(10, 10, FluxRatio(P, Q))));
    });
}
