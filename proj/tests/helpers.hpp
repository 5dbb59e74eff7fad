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

#include <cmath>
#include <random>
#include <vector>

#include "riccimorph/mesh.hpp"

namespace riccimorph::testing {

inline TriMesh single_triangle(double a = 1, double b = 1) {
  return build_mesh({{0, 0, 0}, {a, 0, 0}, {0, b, 0}}, {{0, 1, 2}});
}

inline TriMesh equilateral_triangle() {
  return build_mesh({{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0}},
                    {{0, 1, 2}});
}

// unit square split along the diagonal, consistently oriented
inline TriMesh unit_square() {
  return build_mesh({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}},
                    {{0, 1, 2}, {0, 2, 3}});
}

inline TriMesh octahedron() {
  return build_mesh({{1, 0, 0},
                     {-1, 0, 0},
                     {0, 1, 0},
                     {0, -1, 0},
                     {0, 0, 1},
                     {0, 0, -1}},
                    {{0, 2, 4},
                     {2, 1, 4},
                     {1, 3, 4},
                     {3, 0, 4},
                     {2, 0, 5},
                     {1, 2, 5},
                     {3, 1, 5},
                     {0, 3, 5}});
}

// hub-and-ring fan disk with n vertices, seeded 3D jitter
inline TriMesh random_fan_disk(int n, uint64_t seed, double jitter = 0.08) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  std::vector<Vec3> vertices;
  vertices.push_back({u(rng), u(rng), u(rng)});
  const int ring = n - 1;
  for (int i = 0; i < ring; ++i) {
    const double angle = 2 * 3.14159265358979323846 * i / ring;
    vertices.push_back(
        {std::cos(angle) + u(rng), std::sin(angle) + u(rng), u(rng)});
  }
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i < ring; ++i)
    faces.push_back({0, 1 + i, 1 + (i + 1) % ring});
  return build_mesh(std::move(vertices), std::move(faces));
}

}  // namespace riccimorph::testing
