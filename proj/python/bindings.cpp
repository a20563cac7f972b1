// Copyright 2026 The Sunflower Pathfinding Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sunflower/classical.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/expansion.hpp"
#include "sunflower/filtering.hpp"
#include "sunflower/hamiltonian.hpp"
#include "sunflower/parallel.hpp"
#include "sunflower/qsim.hpp"
#include "sunflower/spectral.hpp"
#include "sunflower/stats.hpp"

namespace py = pybind11;
using namespace sunflower;

namespace {

py::dict meter_dict(const MeterSnapshot& s) {
  py::dict d;
  d["neighbor"] = s.neighbor;
  d["multiplicity"] = s.multiplicity;
  d["indicator"] = s.indicator;
  d["total"] = s.total();
  return d;
}

py::dict interval_dict(const Interval& i) {
  py::dict d;
  d["rate"] = i.rate;
  d["low"] = i.low;
  d["high"] = i.high;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sunflower graph construction, symmetric-subspace spectra and pathfinding experiments";

  static py::exception<Error> error(m, "SunflowerError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (code name, message)
      py::object args = py::make_tuple(std::string(error_code_name(e.code())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<GraphParams>(m, "GraphParams")
      .def_readonly("d", &GraphParams::d)
      .def_readonly("m", &GraphParams::m)
      .def_readonly("n", &GraphParams::n)
      .def_readonly("n_aux", &GraphParams::n_aux)
      .def_readonly("seed", &GraphParams::seed)
      .def("layer_size", &GraphParams::layer_size)
      .def("graph_vertex_count", &GraphParams::graph_vertex_count)
      .def("total_vertex_count", &GraphParams::total_vertex_count)
      .def("label_bits", &GraphParams::label_bits)
      .def("__repr__", [](const GraphParams& p) {
        return "GraphParams(d=" + std::to_string(p.d) + ", m=" + std::to_string(p.m) + ", n=" + std::to_string(p.n) +
               ", n_aux=" + std::to_string(p.n_aux) + ", seed=" + std::to_string(p.seed) + ")";
      });

  m.def(
      "make_params",
      [](std::int64_t d, std::int64_t mm, std::int64_t n, std::int64_t n_aux, std::uint64_t seed) {
        return validate_params({d, mm, n, n_aux, seed});
      },
      py::arg("d"), py::arg("m"), py::arg("n"), py::arg("n_aux") = 0, py::arg("seed") = 0);

  py::class_<SunflowerGraph>(m, "Graph")
      .def(py::init([](const GraphParams& p, const std::string& backend) {
             return std::make_unique<SunflowerGraph>(p, parse_backend(backend));
           }),
           py::arg("params"), py::arg("backend") = "explicit")
      .def_property_readonly("params", &SunflowerGraph::params)
      .def_property_readonly("backend", [](const SunflowerGraph& g) { return std::string(backend_name(g.backend())); })
      .def_property_readonly("label_bits", &SunflowerGraph::label_bits)
      .def_property_readonly("s_label", &SunflowerGraph::s_label)
      .def_property_readonly("t_label", &SunflowerGraph::t_label)
      .def("neighbor", &SunflowerGraph::neighbor, py::arg("label"), py::arg("k"))
      .def("multiplicity", &SunflowerGraph::multiplicity)
      .def("is_target", &SunflowerGraph::is_target)
      .def("is_sentinel", &SunflowerGraph::is_sentinel)
      .def("meters", [](const SunflowerGraph& g) { return meter_dict(g.meters().snapshot()); })
      .def("reset_meters", [](const SunflowerGraph& g) { g.meters().reset(); });

  m.def("effective_hamiltonian", [](const GraphParams& p) { return build_H(p).dense; });
  m.def("eigenvalues", [](const GraphParams& p) { return factor_spectrum(build_H(p), false).sorted_eigenvalues(); });
  m.def("spectral_gap", [](const GraphParams& p) { return factor_spectrum(build_H(p), false).delta; });
  m.def("start_overlap_sq", &start_overlap_sq);
  m.def("h1_determinant",
        [](double a, double b, const GraphParams& p) { return static_cast<double>(h1_determinant(a, b, p)); });
  m.def("eval_R", &eval_R, py::arg("x"), py::arg("ell"), py::arg("delta"));
  m.def("choose_degree", &choose_degree, py::arg("gap"), py::arg("alpha"), py::arg("eps"));
  m.def("robustness_bound", &robustness_bound, py::arg("ell"), py::arg("eps_a"), py::arg("alpha"));
  m.def("wilson_interval", [](std::uint64_t k, std::uint64_t n) { return interval_dict(wilson_interval(k, n)); });

  m.def(
      "run_quantum",
      [](const SunflowerGraph& g, int trials, const std::string& mode, double beta, std::uint64_t seed, double eps,
         int workers) {
        const GraphParams& p = g.params();
        const EffectiveHamiltonian H = build_H(p);
        const FilterSpec spec =
            make_filter_spec(factor_spectrum(H, false).delta, p, eps > 0.0 ? eps : default_filter_eps(p));
        const MeasurementDistribution dist =
            parse_sample_mode(mode) == SampleMode::Ideal ? ideal_distribution(p) : filtered_distribution(H, spec);
        std::vector<PathResult> runs;
        {
          py::gil_scoped_release release;
          runs = run_algorithm1_trials(g, dist, spec, beta, seed, trials, resolve_workers(workers));
        }
        py::list out;
        for (const auto& r : runs) out.append(py::module_::import("json").attr("loads")(path_result_to_json(r).dump()));
        return out;
      },
      py::arg("graph"), py::arg("trials") = 100, py::arg("mode") = "ideal", py::arg("beta") = 1.0 / 3.0,
      py::arg("seed") = 0, py::arg("eps") = 0.0, py::arg("workers") = 0);

  m.def(
      "classical_success",
      [](int d, std::vector<int> ns, double c, const std::string& strategy, int trials, std::uint64_t seed,
         int workers) {
        std::vector<SuccessRow> rows;
        {
          py::gil_scoped_release release;
          rows = estimate_success(d, ns, c, parse_strategy(strategy), trials, seed, resolve_workers(workers));
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict row;
          row["n"] = r.n;
          row["m"] = r.m;
          row["budget"] = r.budget;
          row["successes"] = r.successes;
          row["trials"] = r.trials;
          row["interval"] = interval_dict(r.rate);
          out.append(row);
        }
        return out;
      },
      py::arg("d"), py::arg("ns"), py::arg("c") = 0.125, py::arg("strategy") = "random-embedding",
      py::arg("trials") = 100, py::arg("seed") = 0, py::arg("workers") = 0);

  m.def(
      "adjacency_gap",
      [](const SunflowerGraph& g) {
        const GapResult r = adjacency_gap(g);
        py::dict d;
        d["lambda1"] = r.lambda1;
        d["lambda2"] = r.lambda2;
        d["gap"] = r.gap;
        d["method"] = r.method;
        return d;
      },
      py::arg("graph"));

  m.def(
      "bipartite_check",
      [](int N, int D, int draws, const std::string& mode, std::uint64_t seed) {
        const BipartiteReport r = bipartite_check(N, D, draws, parse_check_mode(mode), seed, 1);
        py::dict d;
        d["pass_i"] = r.pass_i;
        d["pass_ii"] = r.pass_ii;
        d["delta"] = r.delta;
        d["cond_ii_exhaustive"] = r.cond_ii_exhaustive;
        return d;
      },
      py::arg("N"), py::arg("D"), py::arg("draws"), py::arg("mode") = "exhaustive", py::arg("seed") = 0);
}
