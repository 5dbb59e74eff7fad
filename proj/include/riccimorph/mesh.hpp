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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace riccimorph {

using Vec3 = std::array<double, 3>;

/// Indexed triangle mesh with derived adjacency. Immutable after
/// construction; all operations on it are pure functions.
///
/// Construction validates manifoldness (every edge in 1 or 2 faces),
/// consistent orientation (each interior edge traversed in opposite
/// directions by its two faces), and connectedness. Disk topology
/// (V - E + F == 1) is required by the flow and layout stages, not here:
/// closed surfaces such as an octahedron are valid meshes too.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  // Derived connectivity, populated by build_mesh.
  std::vector<std::array<int, 2>> edges;       // endpoint ids, smaller first
  std::vector<std::array<int, 2>> edge_faces;  // incident faces, -1 if absent
  std::vector<std::array<int, 3>> face_edges;  // edge ids for (v0v1, v1v2, v2v0)
  std::vector<std::vector<int>> vertex_faces;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<bool> boundary_vertex;           // incident to a single-face edge
  std::vector<bool> boundary_edge;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int euler_characteristic() const {
    return num_vertices() - num_edges() + num_faces();
  }
  bool has_boundary() const;
  bool is_disk() const { return euler_characteristic() == 1 && has_boundary(); }

  /// Edge id for the undirected pair (a, b), or -1 if no such edge.
  int edge_index(int a, int b) const;
};

/// Per-edge positive lengths, indexed like TriMesh::edges.
using EdgeLengths = std::vector<double>;

/// Validates faces and builds adjacency. Throws TopologyError on
/// non-manifold edges, inconsistent orientation, or multiple components.
TriMesh build_mesh(std::vector<Vec3> vertices,
                   std::vector<std::array<int, 3>> faces);

/// Euclidean distance between edge endpoints. Throws MetricError if any
/// edge is shorter than kLengthEps.
EdgeLengths euclidean_edge_lengths(const TriMesh& mesh);

/// Corner angles per face via the cosine law, angle c at face vertex c.
/// Throws MetricError on a triangle-inequality violation.
std::vector<std::array<double, 3>> corner_angles(const TriMesh& mesh,
                                                 const EdgeLengths& lengths);

/// Discrete Gaussian curvature (angle defect): 2*pi minus the incident
/// angle sum at interior vertices, pi minus it at boundary vertices.
std::vector<double> gaussian_curvature(const TriMesh& mesh,
                                       const EdgeLengths& lengths);

/// Angle defect from precomputed corner angles.
std::vector<double> gaussian_curvature(const TriMesh& mesh,
                                       const std::vector<std::array<double, 3>>& angles);

// File I/O. The one-argument load_mesh picks the format from the
// extension (.off / .obj); the two-argument form takes it explicitly.
TriMesh load_mesh(const std::string& path);
TriMesh load_mesh(const std::string& path, const std::string& format);
TriMesh load_off(std::istream& in);
TriMesh load_obj(std::istream& in);
void save_off(const TriMesh& mesh, const std::string& path);
void write_off(const TriMesh& mesh, std::ostream& out);

}  // namespace riccimorph
