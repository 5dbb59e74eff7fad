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
#include <string>
#include <vector>

#include "riccimorph/mesh.hpp"

namespace riccimorph {

/// Planar coordinates realizing a flat metric, plus the face order the
/// breadth-first traversal visited. The gauge is fixed: the seed face is
/// the lowest-index face, its first edge lies on the positive x axis, so
/// repeated runs are exactly reproducible.
struct PlanarEmbedding {
  std::vector<std::array<double, 2>> positions;
  std::vector<int> face_order;
  double max_length_error = 0;  // max relative |embedded - metric| over edges
};

/// Isometric planar embedding of a disk mesh under the given (flattened)
/// metric. Seeds the lowest-index face, then walks face adjacency
/// breadth-first (ties broken by ascending face index), placing each new
/// vertex at the circle intersection that keeps the face orientation
/// positive. A vertex position is fixed by its first placement.
/// Throws EmbedError when the two placement circles fail to intersect
/// beyond the tolerance band (residual curvature too large).
PlanarEmbedding embed_plane(const TriMesh& mesh, const EdgeLengths& lengths);

/// Signed area of each embedded face (positive for counterclockwise).
std::vector<double> embedded_face_areas(const TriMesh& mesh,
                                        const PlanarEmbedding& embedding);

void save_embedding_csv(const PlanarEmbedding& embedding,
                        const std::string& path);
/// OBJ export of the flattened mesh with z = 0.
void save_embedding_obj(const TriMesh& mesh, const PlanarEmbedding& embedding,
                        const std::string& path);
/// Packing circles in the plane: per-vertex center and radius.
void save_circles_csv(const PlanarEmbedding& embedding,
                      const std::vector<double>& radii,
                      const std::string& path);

}  // namespace riccimorph
