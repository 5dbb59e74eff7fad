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

#include "riccimorph/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <unordered_map>

#include "riccimorph/errors.hpp"
#include "riccimorph/tolerances.hpp"

namespace riccimorph {

namespace {

struct PairHash {
  size_t operator()(const std::array<int, 2>& p) const {
    return std::hash<uint64_t>()((uint64_t(uint32_t(p[0])) << 32) |
                                 uint32_t(p[1]));
  }
};

}  // namespace

bool TriMesh::has_boundary() const {
  return std::find(boundary_edge.begin(), boundary_edge.end(), true) !=
         boundary_edge.end();
}

int TriMesh::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (int e : vertex_edges[a]) {
    if (edges[e][0] == a && edges[e][1] == b) return e;
  }
  return -1;
}

TriMesh build_mesh(std::vector<Vec3> vertices,
                   std::vector<std::array<int, 3>> faces) {
  TriMesh m;
  m.vertices = std::move(vertices);
  m.faces = std::move(faces);
  const int nv = m.num_vertices();
  const int nf = m.num_faces();

  for (int f = 0; f < nf; ++f) {
    const auto& t = m.faces[f];
    for (int c = 0; c < 3; ++c) {
      if (t[c] < 0 || t[c] >= nv)
        throw TopologyError("face " + std::to_string(f) +
                            " references invalid vertex " +
                            std::to_string(t[c]));
    }
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[0])
      throw TopologyError("face " + std::to_string(f) +
                          " has repeated vertices");
  }

  // Deduplicate undirected edges; count directed traversals to detect
  // non-manifold edges and orientation flips.
  std::unordered_map<std::array<int, 2>, int, PairHash> edge_ids;
  edge_ids.reserve(size_t(nf) * 2);
  std::vector<int> fwd_count, bwd_count;
  m.face_edges.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const auto& t = m.faces[f];
    for (int c = 0; c < 3; ++c) {
      const int a = t[c], b = t[(c + 1) % 3];
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      auto [it, inserted] = edge_ids.try_emplace(key, m.num_edges());
      if (inserted) {
        m.edges.push_back(key);
        m.edge_faces.push_back({-1, -1});
        fwd_count.push_back(0);
        bwd_count.push_back(0);
      }
      const int e = it->second;
      if (m.edge_faces[e][0] < 0)
        m.edge_faces[e][0] = f;
      else if (m.edge_faces[e][1] < 0)
        m.edge_faces[e][1] = f;
      else
        throw TopologyError("non-manifold edge (" + std::to_string(key[0]) +
                            ", " + std::to_string(key[1]) +
                            ") shared by more than two faces");
      (a < b ? fwd_count : bwd_count)[e] += 1;
      m.face_edges[f][c] = e;
    }
  }
  const int ne = m.num_edges();
  for (int e = 0; e < ne; ++e) {
    if (fwd_count[e] > 1 || bwd_count[e] > 1)
      throw TopologyError("inconsistent face orientation across edge (" +
                          std::to_string(m.edges[e][0]) + ", " +
                          std::to_string(m.edges[e][1]) + ")");
  }

  m.vertex_faces.assign(nv, {});
  m.vertex_edges.assign(nv, {});
  for (int f = 0; f < nf; ++f)
    for (int c = 0; c < 3; ++c) m.vertex_faces[m.faces[f][c]].push_back(f);
  for (int e = 0; e < ne; ++e) {
    m.vertex_edges[m.edges[e][0]].push_back(e);
    m.vertex_edges[m.edges[e][1]].push_back(e);
  }

  m.boundary_edge.assign(ne, false);
  m.boundary_vertex.assign(nv, false);
  for (int e = 0; e < ne; ++e) {
    if (m.edge_faces[e][1] < 0) {
      m.boundary_edge[e] = true;
      m.boundary_vertex[m.edges[e][0]] = true;
      m.boundary_vertex[m.edges[e][1]] = true;
    }
  }

  // Exactly one connected component (isolated vertices count as components).
  if (nv > 0) {
    std::vector<bool> seen(nv, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int e : m.vertex_edges[v]) {
        const int w = m.edges[e][0] == v ? m.edges[e][1] : m.edges[e][0];
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          q.push(w);
        }
      }
    }
    if (reached != nv)
      throw TopologyError("mesh has more than one connected component");
  }
  return m;
}

EdgeLengths euclidean_edge_lengths(const TriMesh& mesh) {
  EdgeLengths lengths(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Vec3& a = mesh.vertices[mesh.edges[e][0]];
    const Vec3& b = mesh.vertices[mesh.edges[e][1]];
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    const double l = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (l < kLengthEps)
      throw MetricError("degenerate edge (" +
                        std::to_string(mesh.edges[e][0]) + ", " +
                        std::to_string(mesh.edges[e][1]) + "): length " +
                        std::to_string(l));
    lengths[e] = l;
  }
  return lengths;
}

std::vector<std::array<double, 3>> corner_angles(const TriMesh& mesh,
                                                 const EdgeLengths& lengths) {
  std::vector<std::array<double, 3>> angles(mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& fe = mesh.face_edges[f];
    for (int c = 0; c < 3; ++c) {
      // adjacent edges at corner c, opposite edge across from it
      const double a = lengths[fe[c]];
      const double b = lengths[fe[(c + 2) % 3]];
      const double o = lengths[fe[(c + 1) % 3]];
      if (o >= a + b || a >= b + o || b >= o + a)
        throw MetricError("triangle inequality violated in face " +
                          std::to_string(f));
      const double cosv = std::clamp((a * a + b * b - o * o) / (2 * a * b),
                                     -1.0, 1.0);
      angles[f][c] = std::acos(cosv);
    }
  }
  return angles;
}

std::vector<double> gaussian_curvature(
    const TriMesh& mesh, const std::vector<std::array<double, 3>>& angles) {
  std::vector<double> curvature(mesh.num_vertices());
  for (int v = 0; v < mesh.num_vertices(); ++v)
    curvature[v] = mesh.boundary_vertex[v] ? std::numbers::pi
                                           : 2 * std::numbers::pi;
  for (int f = 0; f < mesh.num_faces(); ++f)
    for (int c = 0; c < 3; ++c) curvature[mesh.faces[f][c]] -= angles[f][c];
  return curvature;
}

std::vector<double> gaussian_curvature(const TriMesh& mesh,
                                       const EdgeLengths& lengths) {
  return gaussian_curvature(mesh, corner_angles(mesh, lengths));
}

}  // namespace riccimorph
