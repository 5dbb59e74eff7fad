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

#pragma once

#include <string>
#include <vector>

#include "riccimorph/mesh.hpp"
#include "riccimorph/packing.hpp"
#include "riccimorph/ricci.hpp"

namespace riccimorph {

/// Per-vertex morphometric signal: one-ring area change under the flow,
/// absolute log radius, and angle defect on the input metric.
struct FeatureFields {
  std::vector<double> area_distortion;
  std::vector<double> conformal_factor;
  std::vector<double> gaussian_curvature;
};

/// Heron area of every face under the given metric.
std::vector<double> face_areas(const TriMesh& mesh, const EdgeLengths& lengths);

/// Sum of one-ring face areas per vertex.
std::vector<double> one_ring_areas(const TriMesh& mesh,
                                   const EdgeLengths& lengths);

/// One-ring area under the initial metric minus the same under the final
/// metric. Sign follows the initial-minus-current convention; no
/// normalization by ring area is applied.
std::vector<double> area_distortion(const TriMesh& mesh,
                                    const EdgeLengths& initial,
                                    const EdgeLengths& final_lengths);

/// Absolute conformal factor log(gamma_i) + u_i.
std::vector<double> conformal_factor(const PackingMetric& metric,
                                     const std::vector<double>& u);

/// Assembles the three fields from a converged flow. Gaussian curvature is
/// computed on the original input metric, before parameterization.
FeatureFields extract_features(const TriMesh& mesh,
                               const EdgeLengths& initial_lengths,
                               const FlowState& flow,
                               const PackingMetric& metric);

void save_fields_csv(const FeatureFields& fields, const std::string& path);
FeatureFields load_fields_csv(const std::string& path);

}  // namespace riccimorph
