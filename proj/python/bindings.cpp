// Copyright 2026 The Riccimorph Authors.
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riccimorph/entropy.hpp"
#include "riccimorph/errors.hpp"
#include "riccimorph/features.hpp"
#include "riccimorph/layout.hpp"
#include "riccimorph/mesh.hpp"
#include "riccimorph/ml.hpp"
#include "riccimorph/packing.hpp"
#include "riccimorph/pipeline.hpp"
#include "riccimorph/ricci.hpp"
#include "riccimorph/synth.hpp"

namespace py = pybind11;
using namespace riccimorph;

PYBIND11_MODULE(_riccimorph, m) {
  m.doc() = "Conformal morphometry: Ricci-flow planar parameterization, "
            "entropy shape descriptors, and a classification harness.";

  py::class_<TriMesh>(m, "TriMesh")
      .def_readonly("vertices", &TriMesh::vertices)
      .def_readonly("faces", &TriMesh::faces)
      .def_readonly("edges", &TriMesh::edges)
      .def_readonly("boundary_vertex", &TriMesh::boundary_vertex)
      .def_property_readonly("num_vertices", &TriMesh::num_vertices)
      .def_property_readonly("num_edges", &TriMesh::num_edges)
      .def_property_readonly("num_faces", &TriMesh::num_faces)
      .def_property_readonly("euler_characteristic",
                             &TriMesh::euler_characteristic)
      .def_property_readonly("is_disk", &TriMesh::is_disk)
      .def("__repr__", [](const TriMesh& mesh) {
        return "<TriMesh V=" + std::to_string(mesh.num_vertices()) +
               " E=" + std::to_string(mesh.num_edges()) +
               " F=" + std::to_string(mesh.num_faces()) + ">";
      });

  m.def("build_mesh", &build_mesh, py::arg("vertices"), py::arg("faces"));
  m.def("load_mesh",
        py::overload_cast<const std::string&>(&load_mesh), py::arg("path"));
  m.def("load_mesh",
        py::overload_cast<const std::string&, const std::string&>(&load_mesh),
        py::arg("path"), py::arg("format"));
  m.def("save_off", &save_off, py::arg("mesh"), py::arg("path"));

  m.def("euclidean_edge_lengths", &euclidean_edge_lengths, py::arg("mesh"));
  m.def("corner_angles",
        py::overload_cast<const TriMesh&, const EdgeLengths&>(&corner_angles),
        py::arg("mesh"), py::arg("lengths"));
  m.def("gaussian_curvature",
        py::overload_cast<const TriMesh&, const EdgeLengths&>(
            &gaussian_curvature),
        py::arg("mesh"), py::arg("lengths"));

  py::class_<PackingMetric>(m, "PackingMetric")
      .def_readonly("gamma", &PackingMetric::gamma)
      .def_readonly("eta", &PackingMetric::eta);
  m.def("initial_packing", &initial_packing, py::arg("mesh"),
        py::arg("lengths"));
  m.def("lengths_from_packing", &lengths_from_packing, py::arg("mesh"),
        py::arg("metric"), py::arg("u"));

  py::class_<FlowState>(m, "FlowState")
      .def_readonly("u", &FlowState::u)
      .def_readonly("lengths", &FlowState::lengths)
      .def_readonly("curvature", &FlowState::curvature)
      .def_readonly("target_curvature", &FlowState::target_curvature)
      .def_readonly("iterations", &FlowState::iterations)
      .def_readonly("residual", &FlowState::residual)
      .def_readonly("converged", &FlowState::converged)
      .def_readonly("max_negative_weight_edges",
                    &FlowState::max_negative_weight_edges);
  m.def("default_target_curvature", &default_target_curvature,
        py::arg("mesh"), py::arg("lengths"));
  m.def(
      "ricci_flow",
      [](const TriMesh& mesh, const PackingMetric& metric,
         const std::vector<double>& target, double epsilon, int max_iters) {
        FlowOptions opts;
        opts.epsilon = epsilon;
        opts.max_iters = max_iters;
        return ricci_flow(mesh, metric, target, opts);
      },
      py::arg("mesh"), py::arg("metric"), py::arg("target_curvature"),
      py::arg("epsilon") = 1e-6, py::arg("max_iters") = 64);

  py::class_<PlanarEmbedding>(m, "PlanarEmbedding")
      .def_readonly("positions", &PlanarEmbedding::positions)
      .def_readonly("face_order", &PlanarEmbedding::face_order)
      .def_readonly("max_length_error", &PlanarEmbedding::max_length_error);
  m.def("embed_plane", &embed_plane, py::arg("mesh"), py::arg("lengths"));

  py::class_<FeatureFields>(m, "FeatureFields")
      .def_readonly("area_distortion", &FeatureFields::area_distortion)
      .def_readonly("conformal_factor", &FeatureFields::conformal_factor)
      .def_readonly("gaussian_curvature", &FeatureFields::gaussian_curvature);
  m.def("extract_features", &extract_features, py::arg("mesh"),
        py::arg("initial_lengths"), py::arg("flow"), py::arg("metric"));
  m.def("area_distortion", &area_distortion, py::arg("mesh"),
        py::arg("initial"), py::arg("final_lengths"));
  m.def("conformal_factor", &conformal_factor, py::arg("metric"),
        py::arg("u"));

  m.def(
      "histogram_probabilities",
      [](const std::vector<double>& values, int n_bins, double lo,
         double hi) {
        return histogram_probabilities(values, BinningSpec{n_bins, lo, hi, ""});
      },
      py::arg("values"), py::arg("n_bins"), py::arg("lo"), py::arg("hi"));
  m.def("shannon_entropy", &shannon_entropy, py::arg("p"));

  m.def("make_disk", &make_disk, py::arg("rings"));
  m.def(
      "make_subject",
      [](const std::string& class_tag, int rings, uint64_t seed) {
        if (class_tag == "smooth") return make_subject(smooth_spec(rings, seed));
        if (class_tag == "atrophied")
          return make_subject(atrophied_spec(rings, seed));
        throw ConfigError("class_tag must be 'smooth' or 'atrophied'");
      },
      py::arg("class_tag"), py::arg("rings") = 16, py::arg("seed") = 0);

  m.def(
      "welch_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const WelchResult r = welch_t_test(a, b);
        return py::make_tuple(r.t, r.dof, r.p);
      },
      py::arg("a"), py::arg("b"),
      "Welch's two-sample t-test; returns (t, dof, p).");
  m.def(
      "confusion_metrics",
      [](int tp, int tn, int fp, int fn) {
        const Metrics v = metrics({tp, tn, fp, fn});
        py::dict d;
        d["accuracy"] = v.accuracy;
        d["sensitivity"] = v.sensitivity;
        d["specificity"] = v.specificity;
        d["precision"] = v.precision;
        d["f1"] = v.f1;
        return d;
      },
      py::arg("tp"), py::arg("tn"), py::arg("fp"), py::arg("fn"));
  m.def(
      "roc_auc",
      [](const std::vector<double>& scores, const std::vector<int>& labels) {
        return roc_curve(scores, labels).auc;
      },
      py::arg("scores"), py::arg("labels"));

  m.def(
      "run_pipeline",
      [](const std::string& out_dir, int subjects, int rings, int repeats,
         uint64_t seed, const std::vector<int>& scales, int workers) {
        PipelineConfig cfg;
        cfg.out_dir = out_dir;
        cfg.subjects = subjects;
        cfg.rings = rings;
        cfg.repeats = repeats;
        cfg.seed = seed;
        if (!scales.empty()) cfg.scales = scales;
        cfg.workers = workers;
        return run_all(cfg);
      },
      py::arg("out_dir"), py::arg("subjects") = 160, py::arg("rings") = 16,
      py::arg("repeats") = 20, py::arg("seed") = 42,
      py::arg("scales") = std::vector<int>{}, py::arg("workers") = 0,
      "synth + features + classify; returns the exit status.");

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TopologyError>(m, "TopologyError", PyExc_ValueError);
  py::register_exception<MetricError>(m, "MetricError", PyExc_ValueError);
  py::register_exception<PackingError>(m, "PackingError", PyExc_ValueError);
  py::register_exception<SolveError>(m, "SolveError", PyExc_RuntimeError);
  py::register_exception<FlowError>(m, "FlowError", PyExc_RuntimeError);
  py::register_exception<EmbedError>(m, "EmbedError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<StatsError>(m, "StatsError", PyExc_ValueError);
  py::register_exception<TrainError>(m, "TrainError", PyExc_RuntimeError);
}
