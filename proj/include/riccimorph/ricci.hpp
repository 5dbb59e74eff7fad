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

#include <Eigen/SparseCore>
#include <vector>

#include "riccimorph/mesh.hpp"
#include "riccimorph/packing.hpp"

namespace riccimorph {

struct FlowOptions {
  double epsilon = 1e-6;  // convergence threshold on max |K_target - K|
  int max_iters = 64;     // Newton iterations
  int max_halvings = 30;  // step damping attempts per iteration
  bool collect_trace = true;
};

struct FlowTraceRow {
  int iteration;
  double residual;
  double lambda;  // accepted step scale
};

/// Mutable state of the Ricci energy optimization. u is the per-vertex
/// conformal-factor offset from the initial radii, kept mean-zero; the
/// absolute conformal factor of the literature is log(gamma_i) + u_i.
struct FlowState {
  std::vector<double> u;
  EdgeLengths lengths;
  std::vector<double> curvature;         // K at the current metric
  std::vector<double> target_curvature;  // K_target
  int iterations = 0;
  double residual = 0;  // max_i |K_target_i - K_i|
  bool converged = false;
  // diagnostic: negative weights can break positive semidefiniteness
  int max_negative_weight_edges = 0;
  std::vector<FlowTraceRow> trace;
};

/// Zero target curvature at interior vertices; boundary targets
/// proportional to each vertex's share of the boundary length (half the
/// two incident boundary edges), normalized so the total is 2*pi.
std::vector<double> default_target_curvature(const TriMesh& mesh,
                                             const EdgeLengths& lengths);

/// Power center of a triangle laid out with v_i at the origin and v_j on
/// the positive x axis: the unique point with equal power with respect to
/// the three vertex circles, found by intersecting two radical axes.
/// h_* are signed distances from the center to each edge line, positive
/// toward the triangle interior (they go negative when the center leaves
/// the triangle, and are used signed).
struct PowerCenter {
  double x, y;
  double h_ij, h_jk, h_ki;
};
PowerCenter power_center(double l_ij, double l_jk, double l_ki, double gamma_i,
                         double gamma_j, double gamma_k);

/// Per-edge weights: (h_ij^k + h_ji^l) / l_ij for interior edges, one term
/// for boundary edges.
std::vector<double> edge_weights(const TriMesh& mesh,
                                 const EdgeLengths& lengths,
                                 const std::vector<double>& radii);

/// Sparse Laplacian-style matrix: diagonal = sum of incident weights,
/// off-diagonal = -w_ij. Symmetric with zero row sums by construction.
Eigen::SparseMatrix<double> hessian(const TriMesh& mesh,
                                    const std::vector<double>& weights);

/// Solves H du = b restricted to the mean-zero subspace by conjugate
/// gradient, projecting the constant kernel out each iteration. Throws
/// SolveError if CG fails to reach tolerance; callers fall back to a
/// gradient step.
std::vector<double> newton_step(const Eigen::SparseMatrix<double>& H,
                                const std::vector<double>& b);

/// Ricci energy optimization: iterates Newton steps with backtracking
/// damping (step halved until the metric stays valid and the residual does
/// not increase). Returns the final state; converged is false when the
/// iteration limit was reached first. Throws FlowError if the target
/// curvature violates Gauss-Bonnet or a step cannot be damped into
/// validity.
FlowState ricci_flow(const TriMesh& mesh, const PackingMetric& metric,
                     const std::vector<double>& target_curvature,
                     const FlowOptions& opts = {});

}  // namespace riccimorph
