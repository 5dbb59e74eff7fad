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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "helpers.hpp"
#include "riccimorph/errors.hpp"
#include "riccimorph/mesh.hpp"
#include "riccimorph/synth.hpp"
#include "riccimorph/tolerances.hpp"

using namespace riccimorph;
using namespace riccimorph::testing;
using std::numbers::pi;

namespace {

double total_curvature(const TriMesh& mesh) {
  const auto k = gaussian_curvature(mesh, euclidean_edge_lengths(mesh));
  double sum = 0;
  for (double v : k) sum += v;
  return sum;
}

}  // namespace

TEST_SUITE("mesh") {

TEST_CASE("OFF loads a single triangle") {
  std::istringstream in(
      "OFF\n"
      "3 1 3\n"
      "0 0 0\n"
      "1 0 0\n"
      "0 1 0\n"
      "3 0 1 2\n");
  const TriMesh mesh = load_off(in);
  CHECK(mesh.num_vertices() == 3);
  CHECK(mesh.num_edges() == 3);
  CHECK(mesh.num_faces() == 1);
  for (int v = 0; v < 3; ++v) CHECK(mesh.boundary_vertex[v]);
}

TEST_CASE("OFF loads two triangles sharing an edge") {
  std::istringstream in(
      "OFF\n"
      "4 2 5\n"
      "0 0 0\n1 0 0\n1 1 0\n0 1 0\n"
      "3 0 1 2\n"
      "3 0 2 3\n");
  const TriMesh mesh = load_off(in);
  CHECK(mesh.num_vertices() == 4);
  CHECK(mesh.num_edges() == 5);
  CHECK(mesh.num_faces() == 2);
  for (int v = 0; v < 4; ++v) CHECK(mesh.boundary_vertex[v]);
  const int shared = mesh.edge_index(0, 2);
  REQUIRE(shared >= 0);
  CHECK(!mesh.boundary_edge[shared]);
}

TEST_CASE("an edge in three faces is a topology error") {
  std::istringstream in(
      "OFF\n"
      "5 3 0\n"
      "0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 -1 0\n"
      "3 0 1 2\n"
      "3 1 0 3\n"
      "3 0 1 4\n");
  CHECK_THROWS_AS(load_off(in), TopologyError);
}

TEST_CASE("inconsistent orientation is rejected") {
  CHECK_THROWS_AS(build_mesh({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}},
                             {{0, 1, 2}, {0, 3, 2}}),
                  TopologyError);
}

TEST_CASE("degenerate face references are rejected") {
  CHECK_THROWS_AS(build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 1}}),
                  TopologyError);
  CHECK_THROWS_AS(build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 3}}),
                  TopologyError);
  CHECK_THROWS_AS(build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, -1}}),
                  TopologyError);
}

TEST_CASE("multiple components are rejected") {
  CHECK_THROWS_AS(
      build_mesh({{0, 0, 0},
                  {1, 0, 0},
                  {0, 1, 0},
                  {5, 5, 0},
                  {6, 5, 0},
                  {5, 6, 0}},
                 {{0, 1, 2}, {3, 4, 5}}),
      TopologyError);
}

TEST_CASE("malformed OFF files are parse errors") {
  std::istringstream bad_header("OFX\n3 1 3\n");
  CHECK_THROWS_AS(load_off(bad_header), ParseError);
  std::istringstream truncated("OFF\n3 1 3\n0 0 0\n");
  CHECK_THROWS_AS(load_off(truncated), ParseError);
  std::istringstream quad("OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
  CHECK_THROWS_AS(load_off(quad), ParseError);
}

TEST_CASE("OBJ loader consumes v/f records and ignores the rest") {
  std::istringstream in(
      "# comment\n"
      "v 0 0 0\n"
      "v 1 0 0\n"
      "v 0 1 0\n"
      "vn 0 0 1\n"
      "vt 0 0\n"
      "usemtl whatever\n"
      "f 1/1/1 2/2/1 3/3/1\n");
  const TriMesh mesh = load_obj(in);
  CHECK(mesh.num_vertices() == 3);
  CHECK(mesh.num_faces() == 1);
}

TEST_CASE("OFF round-trip preserves coordinates bit-exactly") {
  const TriMesh mesh = random_fan_disk(12, 7);
  std::ostringstream out;
  write_off(mesh, out);
  std::istringstream in(out.str());
  const TriMesh back = load_off(in);
  REQUIRE(back.num_vertices() == mesh.num_vertices());
  for (int v = 0; v < mesh.num_vertices(); ++v)
    for (int c = 0; c < 3; ++c)
      CHECK(back.vertices[v][c] == mesh.vertices[v][c]);
}

TEST_CASE("euclidean edge lengths") {
  SUBCASE("equilateral") {
    const auto l = euclidean_edge_lengths(equilateral_triangle());
    for (double v : l) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("pythagorean 3-4-5") {
    const TriMesh mesh =
        build_mesh({{0, 0, 0}, {3, 0, 0}, {0, 4, 0}}, {{0, 1, 2}});
    const auto l = euclidean_edge_lengths(mesh);
    CHECK(l[mesh.edge_index(0, 1)] == doctest::Approx(3.0));
    CHECK(l[mesh.edge_index(0, 2)] == doctest::Approx(4.0));
    CHECK(l[mesh.edge_index(1, 2)] == doctest::Approx(5.0));
  }
  SUBCASE("duplicate positions are a degeneracy error") {
    const TriMesh mesh =
        build_mesh({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
    CHECK_THROWS_AS(euclidean_edge_lengths(mesh), MetricError);
  }
}

TEST_CASE("corner angles from the cosine law") {
  const TriMesh mesh = single_triangle();
  SUBCASE("equilateral gives pi/3 everywhere") {
    const auto angles = corner_angles(mesh, {1, 1, 1});
    for (int c = 0; c < 3; ++c)
      CHECK(angles[0][c] == doctest::Approx(pi / 3).epsilon(1e-12));
  }
  SUBCASE("3-4-5 has a right angle opposite the hypotenuse") {
    // edges of face (0,1,2): (0,1), (1,2), (2,0)
    const auto angles = corner_angles(mesh, {3, 5, 4});
    CHECK(angles[0][0] == doctest::Approx(pi / 2).epsilon(1e-12));
  }
  SUBCASE("triangle inequality violation is a metric error") {
    CHECK_THROWS_AS(corner_angles(mesh, {1, 1, 2.5}), MetricError);
  }
  SUBCASE("per-face sums are pi") {
    const TriMesh disk = make_disk(3);
    const auto angles = corner_angles(disk, euclidean_edge_lengths(disk));
    for (const auto& a : angles)
      CHECK(std::abs(a[0] + a[1] + a[2] - pi) < kAngleSumEps);
  }
}

TEST_CASE("gaussian curvature") {
  SUBCASE("flat grid interior vertices have zero defect") {
    const TriMesh disk = make_disk(3);
    const auto k = gaussian_curvature(disk, euclidean_edge_lengths(disk));
    for (int v = 0; v < disk.num_vertices(); ++v)
      if (!disk.boundary_vertex[v]) CHECK(std::abs(k[v]) < 1e-12);
  }
  SUBCASE("single equilateral triangle") {
    const auto k = gaussian_curvature(equilateral_triangle(),
                                      {1, 1, 1});
    for (double v : k) CHECK(v == doctest::Approx(2 * pi / 3).epsilon(1e-12));
  }
  SUBCASE("octahedron vertices carry 2pi/3 each, 4pi total") {
    const TriMesh oct = octahedron();
    const auto k = gaussian_curvature(oct, euclidean_edge_lengths(oct));
    for (double v : k) CHECK(v == doctest::Approx(2 * pi / 3).epsilon(1e-12));
    CHECK(std::abs(total_curvature(oct) - 4 * pi) < kGaussBonnetEps);
  }
}

TEST_CASE("Gauss-Bonnet holds on every fixture") {
  const auto check = [](const TriMesh& mesh) {
    const double expected = 2 * pi * mesh.euler_characteristic();
    CHECK(std::abs(total_curvature(mesh) - expected) < kGaussBonnetEps);
  };
  check(equilateral_triangle());
  check(unit_square());
  check(octahedron());
  for (int rings = 1; rings <= 6; ++rings) check(make_disk(rings));
  check(make_subject(atrophied_spec(8, 3)));
  check(random_fan_disk(20, 11));
}

TEST_CASE("boundary flags match single-face edges") {
  const TriMesh mesh = make_subject(smooth_spec(4, 5));
  std::vector<bool> expect(mesh.num_vertices(), false);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (mesh.edge_faces[e][1] < 0) {
      expect[mesh.edges[e][0]] = true;
      expect[mesh.edges[e][1]] = true;
    }
  }
  for (int v = 0; v < mesh.num_vertices(); ++v)
    CHECK(mesh.boundary_vertex[v] == expect[v]);
}

}  // TEST_SUITE
