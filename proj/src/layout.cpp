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

#include "riccimorph/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>

#include "riccimorph/errors.hpp"
#include "riccimorph/tolerances.hpp"

namespace riccimorph {

namespace {

// Intersection of circles (a, r1) and (b, r2) on the positive-area side of
// the directed segment a -> b. Tiny negative discriminants are clamped;
// separations beyond the tolerance band are an embedding failure.
std::array<double, 2> circle_intersection(const std::array<double, 2>& a,
                                          const std::array<double, 2>& b,
                                          double r1, double r2) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double d = std::hypot(dx, dy);
  const double scale = std::max({d, r1, r2});
  const double band = kEmbedBandRel * scale;
  if (d - (r1 + r2) > band || (std::abs(r1 - r2) - d) > band)
    throw EmbedError("circle intersection failed: centers " +
                     std::to_string(d) + " apart with radii " +
                     std::to_string(r1) + ", " + std::to_string(r2));
  const double along = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
  const double h2 = r1 * r1 - along * along;
  const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
  const double ex = dx / d, ey = dy / d;
  // left normal of a -> b keeps the face counterclockwise
  return {a[0] + along * ex - h * ey, a[1] + along * ey + h * ex};
}

}  // namespace

PlanarEmbedding embed_plane(const TriMesh& mesh, const EdgeLengths& lengths) {
  if (!mesh.is_disk())
    throw EmbedError("planar embedding requires a disk mesh (chi = " +
                     std::to_string(mesh.euler_characteristic()) + ")");
  const auto angles = corner_angles(mesh, lengths);  // validates the metric

  PlanarEmbedding out;
  out.positions.assign(mesh.num_vertices(), {0.0, 0.0});
  std::vector<bool> placed(mesh.num_vertices(), false);
  std::vector<bool> visited(mesh.num_faces(), false);

  // seed face: lowest index, first edge on the positive x axis
  {
    const auto& t = mesh.faces[0];
    const auto& fe = mesh.face_edges[0];
    const double l01 = lengths[fe[0]], l20 = lengths[fe[2]];
    const double theta0 = angles[0][0];
    out.positions[t[0]] = {0.0, 0.0};
    out.positions[t[1]] = {l01, 0.0};
    out.positions[t[2]] = {l20 * std::cos(theta0), l20 * std::sin(theta0)};
    placed[t[0]] = placed[t[1]] = placed[t[2]] = true;
  }
  visited[0] = true;

  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    out.face_order.push_back(f);

    // place this face's unplaced vertex, if any
    const auto& t = mesh.faces[f];
    int unknown = -1;
    for (int c = 0; c < 3; ++c)
      if (!placed[t[c]]) unknown = c;
    if (unknown >= 0) {
      // rotate so the unknown vertex is third; rotation keeps orientation
      const int vi = t[(unknown + 1) % 3];
      const int vj = t[(unknown + 2) % 3];
      const int vk = t[unknown];
      const double l_ik = lengths[mesh.face_edges[f][unknown]];
      const double l_jk = lengths[mesh.face_edges[f][(unknown + 2) % 3]];
      out.positions[vk] = circle_intersection(out.positions[vi],
                                              out.positions[vj], l_ik, l_jk);
      placed[vk] = true;
    }

    // enqueue unvisited neighbors in ascending face order
    std::array<int, 3> neighbors{-1, -1, -1};
    int count = 0;
    for (int e : mesh.face_edges[f]) {
      for (int g : mesh.edge_faces[e])
        if (g >= 0 && g != f) neighbors[count++] = g;
    }
    std::sort(neighbors.begin(), neighbors.begin() + count);
    for (int i = 0; i < count; ++i) {
      if (!visited[neighbors[i]]) {
        visited[neighbors[i]] = true;
        queue.push(neighbors[i]);
      }
    }
  }

  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto& pa = out.positions[mesh.edges[e][0]];
    const auto& pb = out.positions[mesh.edges[e][1]];
    const double d = std::hypot(pa[0] - pb[0], pa[1] - pb[1]);
    out.max_length_error = std::max(out.max_length_error,
                                    std::abs(d - lengths[e]) / lengths[e]);
  }
  return out;
}

std::vector<double> embedded_face_areas(const TriMesh& mesh,
                                        const PlanarEmbedding& embedding) {
  std::vector<double> areas(mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& a = embedding.positions[mesh.faces[f][0]];
    const auto& b = embedding.positions[mesh.faces[f][1]];
    const auto& c = embedding.positions[mesh.faces[f][2]];
    areas[f] = ((b[0] - a[0]) * (c[1] - a[1]) -
                (b[1] - a[1]) * (c[0] - a[0])) / 2;
  }
  return areas;
}

void save_embedding_csv(const PlanarEmbedding& embedding,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << "vertex_id,x,y\n";
  char buf[96];
  for (size_t v = 0; v < embedding.positions.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", v,
                  embedding.positions[v][0], embedding.positions[v][1]);
    out << buf;
  }
}

void save_embedding_obj(const TriMesh& mesh, const PlanarEmbedding& embedding,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  char buf[96];
  for (const auto& p : embedding.positions) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g 0\n", p[0], p[1]);
    out << buf;
  }
  for (const auto& t : mesh.faces)
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

void save_circles_csv(const PlanarEmbedding& embedding,
                      const std::vector<double>& radii,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << "vertex_id,x,y,radius\n";
  char buf[128];
  for (size_t v = 0; v < embedding.positions.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", v,
                  embedding.positions[v][0], embedding.positions[v][1],
                  radii[v]);
    out << buf;
  }
}

}  // namespace riccimorph
