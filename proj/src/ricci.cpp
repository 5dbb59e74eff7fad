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

#include "riccimorph/ricci.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "riccimorph/errors.hpp"
#include "riccimorph/tolerances.hpp"

namespace riccimorph {

namespace {

void subtract_mean(std::vector<double>& v) {
  double sum = 0;
  for (double x : v) sum += x;
  const double mean = sum / double(v.size());
  for (double& x : v) x -= mean;
}

double max_abs_residual(const std::vector<double>& target,
                        const std::vector<double>& curvature) {
  double r = 0;
  for (size_t i = 0; i < target.size(); ++i)
    r = std::max(r, std::abs(target[i] - curvature[i]));
  return r;
}

// All faces strictly satisfy the triangle inequality.
bool metric_valid(const TriMesh& mesh, const EdgeLengths& lengths) {
  for (const auto& fe : mesh.face_edges) {
    const double a = lengths[fe[0]], b = lengths[fe[1]], c = lengths[fe[2]];
    if (a + b <= c || b + c <= a || c + a <= b) return false;
  }
  return true;
}

}  // namespace

std::vector<double> default_target_curvature(const TriMesh& mesh,
                                             const EdgeLengths& lengths) {
  if (!mesh.is_disk())
    throw FlowError("default target curvature requires a disk mesh (chi = " +
                    std::to_string(mesh.euler_characteristic()) + ")");
  std::vector<double> target(mesh.num_vertices(), 0.0);
  std::vector<double> share(mesh.num_vertices(), 0.0);
  double total = 0;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.boundary_edge[e]) continue;
    share[mesh.edges[e][0]] += lengths[e] / 2;
    share[mesh.edges[e][1]] += lengths[e] / 2;
    total += lengths[e];
  }
  int first_boundary = -1;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (!mesh.boundary_vertex[v]) continue;
    if (first_boundary < 0) first_boundary = v;
    target[v] = 2 * std::numbers::pi * share[v] / total;
  }
  // absorb the rounding defect so the sum is exactly 2*pi
  double sum = 0;
  for (double k : target) sum += k;
  target[first_boundary] += 2 * std::numbers::pi - sum;
  return target;
}

PowerCenter power_center(double l_ij, double l_jk, double l_ki, double gamma_i,
                         double gamma_j, double gamma_k) {
  if (l_ij + l_jk <= l_ki || l_jk + l_ki <= l_ij || l_ki + l_ij <= l_jk)
    throw MetricError("power center of a degenerate triangle");
  // local frame: O_i at the origin, O_j on the positive x axis
  const double xk = (l_ij * l_ij + l_ki * l_ki - l_jk * l_jk) / (2 * l_ij);
  const double yk2 = l_ki * l_ki - xk * xk;
  if (yk2 <= 0) throw MetricError("power center of a degenerate triangle");
  const double yk = std::sqrt(yk2);

  // Equal power against circles i and j fixes x; against i and k fixes y
  // (the quadratic terms of the radical-axis equations cancel).
  PowerCenter pc{};
  pc.x = (l_ij * l_ij + gamma_i * gamma_i - gamma_j * gamma_j) / (2 * l_ij);
  pc.y = (l_ki * l_ki + gamma_i * gamma_i - gamma_k * gamma_k - 2 * pc.x * xk) /
         (2 * yk);

  // Signed edge distances, positive toward the interior. The layout is
  // counterclockwise, so the left side of each directed edge is inside.
  pc.h_ij = pc.y;
  pc.h_jk = ((xk - l_ij) * pc.y - yk * (pc.x - l_ij)) / l_jk;
  pc.h_ki = (-xk * (pc.y - yk) + yk * (pc.x - xk)) / l_ki;
  return pc;
}

std::vector<double> edge_weights(const TriMesh& mesh,
                                 const EdgeLengths& lengths,
                                 const std::vector<double>& radii) {
  std::vector<double> w(mesh.num_edges(), 0.0);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& t = mesh.faces[f];
    const auto& fe = mesh.face_edges[f];
    const double l_ij = lengths[fe[0]], l_jk = lengths[fe[1]],
                 l_ki = lengths[fe[2]];
    const PowerCenter pc = power_center(l_ij, l_jk, l_ki, radii[t[0]],
                                        radii[t[1]], radii[t[2]]);
    w[fe[0]] += pc.h_ij / l_ij;
    w[fe[1]] += pc.h_jk / l_jk;
    w[fe[2]] += pc.h_ki / l_ki;
  }
  return w;
}

Eigen::SparseMatrix<double> hessian(const TriMesh& mesh,
                                    const std::vector<double>& weights) {
  const int n = mesh.num_vertices();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(size_t(mesh.num_edges()) * 4);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const int a = mesh.edges[e][0], b = mesh.edges[e][1];
    const double w = weights[e];
    triplets.emplace_back(a, b, -w);
    triplets.emplace_back(b, a, -w);
    triplets.emplace_back(a, a, w);
    triplets.emplace_back(b, b, w);
  }
  Eigen::SparseMatrix<double> H(n, n);
  H.setFromTriplets(triplets.begin(), triplets.end());
  return H;
}

std::vector<double> newton_step(const Eigen::SparseMatrix<double>& H,
                                const std::vector<double>& b) {
  const Eigen::Index n = H.rows();
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), n);
  rhs.array() -= rhs.mean();

  const double tol = kCgTol * std::max(1.0, rhs.norm());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd r = rhs;
  Eigen::VectorXd p = r;
  double rs = r.squaredNorm();
  const Eigen::Index max_iters = 10 * n;
  bool ok = r.norm() <= tol;
  for (Eigen::Index it = 0; it < max_iters && !ok; ++it) {
    Eigen::VectorXd q = H * p;
    q.array() -= q.mean();  // keep the iteration in the mean-zero subspace
    const double pq = p.dot(q);
    if (!(pq > 0))
      throw SolveError("conjugate gradient breakdown: H not positive "
                       "definite on the mean-zero subspace");
    const double alpha = rs / pq;
    x += alpha * p;
    r -= alpha * q;
    const double rs_next = r.squaredNorm();
    if (std::sqrt(rs_next) <= tol) {
      ok = true;
      break;
    }
    p = r + (rs_next / rs) * p;
    rs = rs_next;
  }
  if (!ok) throw SolveError("conjugate gradient did not converge");
  x.array() -= x.mean();
  return std::vector<double>(x.data(), x.data() + n);
}

FlowState ricci_flow(const TriMesh& mesh, const PackingMetric& metric,
                     const std::vector<double>& target_curvature,
                     const FlowOptions& opts) {
  const int n = mesh.num_vertices();
  if (static_cast<int>(target_curvature.size()) != n)
    throw FlowError("target curvature size mismatch");
  double target_sum = 0;
  for (double k : target_curvature) target_sum += k;
  const double expected = 2 * std::numbers::pi * mesh.euler_characteristic();
  if (std::abs(target_sum - expected) > kGaussBonnetEps)
    throw FlowError("target curvature violates Gauss-Bonnet: sum = " +
                    std::to_string(target_sum) + ", expected " +
                    std::to_string(expected));

  FlowState state;
  state.target_curvature = target_curvature;
  state.u.assign(n, 0.0);
  state.lengths = lengths_from_packing(mesh, metric, state.u);
  state.curvature = gaussian_curvature(mesh, state.lengths);
  state.residual = max_abs_residual(target_curvature, state.curvature);

  while (state.residual > opts.epsilon && state.iterations < opts.max_iters) {
    const std::vector<double> radii = current_radii(metric, state.u);
    const std::vector<double> w = edge_weights(mesh, state.lengths, radii);
    int negative = 0;
    for (double weight : w) negative += weight < 0 ? 1 : 0;
    state.max_negative_weight_edges =
        std::max(state.max_negative_weight_edges, negative);
    const Eigen::SparseMatrix<double> H = hessian(mesh, w);
    std::vector<double> b(n);
    for (int v = 0; v < n; ++v)
      b[v] = target_curvature[v] - state.curvature[v];

    std::vector<double> du;
    try {
      du = newton_step(H, b);
    } catch (const SolveError&) {
      du = b;  // gradient fallback
      subtract_mean(du);
    }

    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= opts.max_halvings; ++halving) {
      std::vector<double> u_next(n);
      for (int v = 0; v < n; ++v) u_next[v] = state.u[v] + lambda * du[v];
      subtract_mean(u_next);
      try {
        EdgeLengths lengths_next = lengths_from_packing(mesh, metric, u_next);
        if (metric_valid(mesh, lengths_next)) {
          std::vector<double> curvature_next =
              gaussian_curvature(mesh, lengths_next);
          const double residual_next =
              max_abs_residual(target_curvature, curvature_next);
          if (residual_next <= state.residual) {
            state.u = std::move(u_next);
            state.lengths = std::move(lengths_next);
            state.curvature = std::move(curvature_next);
            state.residual = residual_next;
            accepted = true;
            break;
          }
        }
      } catch (const MetricError&) {
        // collapsed metric; halve and retry
      }
      lambda /= 2;
    }
    if (!accepted)
      throw FlowError("metric collapse: no valid step after " +
                      std::to_string(opts.max_halvings) + " halvings at "
                      "iteration " + std::to_string(state.iterations));
    ++state.iterations;
    if (opts.collect_trace)
      state.trace.push_back({state.iterations, state.residual, lambda});
  }
  state.converged = state.residual <= opts.epsilon;
  return state;
}

}  // namespace riccimorph
