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

#include "riccimorph/packing.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "riccimorph/errors.hpp"

namespace riccimorph {

PackingMetric initial_packing(const TriMesh& mesh, const EdgeLengths& lengths) {
  PackingMetric metric;
  metric.gamma.assign(mesh.num_vertices(),
                      std::numeric_limits<double>::infinity());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& t = mesh.faces[f];
    const auto& fe = mesh.face_edges[f];
    for (int c = 0; c < 3; ++c) {
      // corner radius at vertex c: (l_ij + l_ki - l_jk) / 2
      const double r =
          (lengths[fe[c]] + lengths[fe[(c + 2) % 3]] - lengths[fe[(c + 1) % 3]]) /
          2;
      if (r <= 0)
        throw PackingError("nonpositive corner radius at vertex " +
                           std::to_string(t[c]) + " in face " +
                           std::to_string(f));
      metric.gamma[t[c]] = std::min(metric.gamma[t[c]], r);
    }
  }
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (!std::isfinite(metric.gamma[v]))
      throw PackingError("vertex " + std::to_string(v) +
                         " has no incident face");
  }
  metric.eta.resize(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const double gi = metric.gamma[mesh.edges[e][0]];
    const double gj = metric.gamma[mesh.edges[e][1]];
    const double l = lengths[e];
    metric.eta[e] = (l * l - gi * gi - gj * gj) / (2 * gi * gj);
  }
  return metric;
}

std::vector<double> current_radii(const PackingMetric& metric,
                                  const std::vector<double>& u) {
  std::vector<double> radii(metric.gamma.size());
  for (size_t v = 0; v < radii.size(); ++v)
    radii[v] = std::exp(u[v]) * metric.gamma[v];
  return radii;
}

EdgeLengths lengths_from_packing(const TriMesh& mesh,
                                 const PackingMetric& metric,
                                 const std::vector<double>& u) {
  const std::vector<double> g = current_radii(metric, u);
  EdgeLengths lengths(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const double gi = g[mesh.edges[e][0]];
    const double gj = g[mesh.edges[e][1]];
    const double l2 = gi * gi + gj * gj + 2 * gi * gj * metric.eta[e];
    if (l2 <= 0)
      throw MetricError("metric collapse on edge (" +
                        std::to_string(mesh.edges[e][0]) + ", " +
                        std::to_string(mesh.edges[e][1]) + "): l^2 = " +
                        std::to_string(l2));
    lengths[e] = std::sqrt(l2);
  }
  return lengths;
}

}  // namespace riccimorph
