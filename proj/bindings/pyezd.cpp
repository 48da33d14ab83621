/*
   Copyright 2026 The ezd authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ezd/job.hpp"
#include "ezd/resolution.hpp"

namespace py = pybind11;
using namespace ezd;

namespace {

/// Thin ring handle for interactive exploration; heavier work goes through
/// run_job so Python and the CLI share one verification surface.
struct PyRing {
    AlgebraPtr alg;

    explicit PyRing(const std::vector<std::string>& vars, const std::vector<std::string>& rels)
        : alg(from_monomial_quotient(vars, rels))
    {
    }

    int dim() const { return alg->dim; }
    int nilpotency() const { return alg->nilpotency; }
    std::vector<std::string> labels() const { return alg->labels; }
    std::vector<long long> hilbert() const { return hilbert_coeffs_ring(*alg); }
    bool is_exact_pair_expr(const std::string& f, const std::string& g) const
    {
        return ezd::is_exact_pair(*alg, parse_element(*alg, f), parse_element(*alg, g)).ok();
    }
    int annihilator_dim(const std::string& f) const
    {
        return annihilator(*alg, parse_element(*alg, f)).dim();
    }
    bool is_conca(const std::string& f) const { return is_conca_generator(*alg, parse_element(*alg, f)); }
};

py::dict run_job(const std::string& command, const std::string& job_json, int cap, long long seed,
                 const std::string& format)
{
    JobSpec job = load_job(job_json, cap, seed);
    Report rep = run_command(command, job);
    py::dict out;
    out["exit_code"] = rep.exit_code;
    out["report"] = format == "text" ? rep.to_text() : rep.to_machine();
    return out;
}

py::tuple tor_betti(const std::string& job_json, int cap)
{
    JobSpec job = load_job(job_json, cap, -1);
    Pipeline pl = build_pipeline(job.ring, job.f, job.g, job.module_m, job.cap, job.seed);
    int through = job.cap - 2;
    TorTable tq = tor_q(pl, job.module_n, through);
    TorTable tr = tor_r(pl, job.module_n, through);
    return py::make_tuple(tq.beta, tr.beta);
}

}  // namespace

PYBIND11_MODULE(pyezd, m)
{
    m.doc() = "exact zero divisors: Eisenbud operators, mapping cones and Poincare series, verified exactly";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        }
        catch (const ezd::Error& e) {
            if (e.kind() == ezd::ErrKind::parse)
                PyErr_SetString(PyExc_ValueError, e.what());
            else
                PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<PyRing>(m, "Ring")
        .def(py::init<const std::vector<std::string>&, const std::vector<std::string>&>(), py::arg("variables"),
             py::arg("relations"))
        .def_property_readonly("dim", &PyRing::dim)
        .def_property_readonly("nilpotency", &PyRing::nilpotency)
        .def("labels", &PyRing::labels)
        .def("hilbert", &PyRing::hilbert)
        .def("is_exact_pair", &PyRing::is_exact_pair_expr, py::arg("f"), py::arg("g"))
        .def("annihilator_dim", &PyRing::annihilator_dim, py::arg("f"))
        .def("is_conca_generator", &PyRing::is_conca, py::arg("f"));

    m.def("run_job", &run_job, py::arg("command"), py::arg("job_json"), py::arg("cap") = -1, py::arg("seed") = -1,
          py::arg("format") = "machine",
          "Run one CLI command (check-ezd | verify | series | tor) on a JSON job description.");
    m.def("tor_betti", &tor_betti, py::arg("job_json"), py::arg("cap") = -1,
          "Tor lengths over Q and over R for the job's (M, N), through cap - 2.");
}
