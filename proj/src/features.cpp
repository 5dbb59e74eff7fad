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

#include "riccimorph/features.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "riccimorph/errors.hpp"

namespace riccimorph {

std::vector<double> face_areas(const TriMesh& mesh,
                               const EdgeLengths& lengths) {
  std::vector<double> areas(mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& fe = mesh.face_edges[f];
    const double a = lengths[fe[0]], b = lengths[fe[1]], c = lengths[fe[2]];
    const double s = (a + b + c) / 2;
    const double p = s * (s - a) * (s - b) * (s - c);
    if (s - a <= 0 || s - b <= 0 || s - c <= 0)
      throw MetricError("triangle inequality violated in face " +
                        std::to_string(f));
    areas[f] = std::sqrt(p > 0 ? p : 0);
  }
  return areas;
}

std::vector<double> one_ring_areas(const TriMesh& mesh,
                                   const EdgeLengths& lengths) {
  const std::vector<double> areas = face_areas(mesh, lengths);
  std::vector<double> ring(mesh.num_vertices(), 0.0);
  for (int v = 0; v < mesh.num_vertices(); ++v)
    for (int f : mesh.vertex_faces[v]) ring[v] += areas[f];
  return ring;
}

std::vector<double> area_distortion(const TriMesh& mesh,
                                    const EdgeLengths& initial,
                                    const EdgeLengths& final_lengths) {
  const std::vector<double> before = one_ring_areas(mesh, initial);
  const std::vector<double> after = one_ring_areas(mesh, final_lengths);
  std::vector<double> ad(mesh.num_vertices());
  for (int v = 0; v < mesh.num_vertices(); ++v) ad[v] = before[v] - after[v];
  return ad;
}

std::vector<double> conformal_factor(const PackingMetric& metric,
                                     const std::vector<double>& u) {
  std::vector<double> cf(metric.gamma.size());
  for (size_t v = 0; v < cf.size(); ++v)
    cf[v] = std::log(metric.gamma[v]) + u[v];
  return cf;
}

FeatureFields extract_features(const TriMesh& mesh,
                               const EdgeLengths& initial_lengths,
                               const FlowState& flow,
                               const PackingMetric& metric) {
  FeatureFields fields;
  fields.area_distortion = area_distortion(mesh, initial_lengths, flow.lengths);
  fields.conformal_factor = conformal_factor(metric, flow.u);
  fields.gaussian_curvature = gaussian_curvature(mesh, initial_lengths);
  return fields;
}

void save_fields_csv(const FeatureFields& fields, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << "vertex_id,area_distortion,conformal_factor,gaussian_curvature\n";
  char buf[160];
  for (size_t v = 0; v < fields.area_distortion.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", v,
                  fields.area_distortion[v], fields.conformal_factor[v],
                  fields.gaussian_curvature[v]);
    out << buf;
  }
}

FeatureFields load_fields_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fields file: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("vertex_id,area_distortion", 0) != 0)
    throw ParseError("bad fields CSV header in " + path);
  FeatureFields fields;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t id;
    double ad, cf, k;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf,%lf", &id, &ad, &cf, &k) != 4)
      throw ParseError("bad fields CSV row in " + path + ": " + line);
    fields.area_distortion.push_back(ad);
    fields.conformal_factor.push_back(cf);
    fields.gaussian_curvature.push_back(k);
  }
  if (fields.area_distortion.empty())
    throw ParseError("empty fields CSV: " + path);
  return fields;
}

}  // namespace riccimorph
