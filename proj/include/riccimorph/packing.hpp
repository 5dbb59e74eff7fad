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

#include <vector>

#include "riccimorph/mesh.hpp"

namespace riccimorph {

/// Inversive-distance circle packing: a radius per vertex and a fixed
/// inversive distance per edge. Edge lengths are recovered through
///   l_ij^2 = g_i^2 + g_j^2 + 2 g_i g_j eta_ij
/// where g_i = exp(u_i) * gamma[i] and u is the conformal-factor offset
/// (u = 0 reproduces the input metric exactly). eta never changes during
/// the flow; only the radii evolve.
struct PackingMetric {
  std::vector<double> gamma;  // per-vertex initial radius, > 0
  std::vector<double> eta;    // per-edge inversive distance
};

/// Builds the initial packing from a metric: corner radii
/// (l_ij + l_ki - l_jk)/2 minimized over incident faces, then eta from the
/// length relation. Throws PackingError if a corner radius is nonpositive.
PackingMetric initial_packing(const TriMesh& mesh, const EdgeLengths& lengths);

/// Current radii exp(u_i) * gamma_i for a conformal-factor offset u.
std::vector<double> current_radii(const PackingMetric& metric,
                                  const std::vector<double>& u);

/// Edge lengths for the packing at offset u. Throws MetricError if any
/// squared length is nonpositive (metric collapse; callers damp the step).
EdgeLengths lengths_from_packing(const TriMesh& mesh,
                                 const PackingMetric& metric,
                                 const std::vector<double>& u);

}  // namespace riccimorph
