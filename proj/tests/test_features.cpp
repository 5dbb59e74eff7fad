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
#include <filesystem>

#include "helpers.hpp"
#include "riccimorph/features.hpp"
#include "riccimorph/ricci.hpp"
#include "riccimorph/synth.hpp"

using namespace riccimorph;
using namespace riccimorph::testing;

TEST_SUITE("features") {

TEST_CASE("area distortion") {
  const TriMesh mesh = make_subject(smooth_spec(5, 3));
  const EdgeLengths lengths = euclidean_edge_lengths(mesh);

  SUBCASE("identical metrics give zero") {
    for (double ad : area_distortion(mesh, lengths, lengths))
      CHECK(ad == 0.0);
  }
  SUBCASE("uniform scaling follows the Heron area law") {
    const double s = 1.3;
    EdgeLengths scaled = lengths;
    for (double& l : scaled) l *= s;
    const auto ad = area_distortion(mesh, lengths, scaled);
    const auto ring = one_ring_areas(mesh, lengths);
    for (int v = 0; v < mesh.num_vertices(); ++v)
      CHECK(ad[v] == doctest::Approx(ring[v] * (1 - s * s)).epsilon(1e-10));
  }
  SUBCASE("equilateral triangle doubled in size") {
    const TriMesh tri = equilateral_triangle();
    const auto ad = area_distortion(tri, {1, 1, 1}, {2, 2, 2});
    const double expected = -3 * std::sqrt(3.0) / 4;  // (sqrt(3)/4)(1 - 4)
    for (double v : ad) CHECK(v == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("total distortion is three times the total area change") {
    EdgeLengths warped = lengths;
    for (size_t e = 0; e < warped.size(); ++e)
      warped[e] *= 1 + 0.05 * std::sin(double(e));
    const auto ad = area_distortion(mesh, lengths, warped);
    double ad_sum = 0;
    for (double v : ad) ad_sum += v;
    double before = 0, after = 0;
    for (double a : face_areas(mesh, lengths)) before += a;
    for (double a : face_areas(mesh, warped)) after += a;
    CHECK(ad_sum == doctest::Approx(3 * (before - after)).epsilon(1e-9));
  }
}

TEST_CASE("conformal factor") {
  SUBCASE("equilateral packing gives log(1/2)") {
    const TriMesh tri = equilateral_triangle();
    const PackingMetric metric = initial_packing(tri, {1, 1, 1});
    const auto cf = conformal_factor(metric, {0, 0, 0});
    for (double v : cf)
      CHECK(v == doctest::Approx(std::log(0.5)).epsilon(1e-12));
  }
  SUBCASE("a uniform offset shifts every value") {
    const TriMesh tri = equilateral_triangle();
    const PackingMetric metric = initial_packing(tri, {1, 1, 1});
    const double c = std::log(2.0);
    const auto cf = conformal_factor(metric, {c, c, c});
    for (double v : cf)
      CHECK(v == doctest::Approx(std::log(0.5) + c).epsilon(1e-12));
  }
  SUBCASE("mixed radii of the (2,2,3) triangle") {
    const TriMesh tri = single_triangle();
    const PackingMetric metric = initial_packing(tri, {2, 3, 2});
    const auto cf = conformal_factor(metric, {0, 0, 0});
    CHECK(cf[0] == doctest::Approx(std::log(0.5)).epsilon(1e-12));
    CHECK(cf[1] == doctest::Approx(std::log(1.5)).epsilon(1e-12));
    CHECK(cf[2] == doctest::Approx(std::log(1.5)).epsilon(1e-12));
  }
  SUBCASE("invariant under rigid motion of the input") {
    TriMesh mesh = make_subject(smooth_spec(4, 21));
    const PackingMetric before =
        initial_packing(mesh, euclidean_edge_lengths(mesh));
    // rotate 90 degrees about z and translate
    for (Vec3& p : mesh.vertices)
      p = {-p[1] + 5, p[0] - 2, p[2] + 1};
    const TriMesh moved = build_mesh(mesh.vertices, mesh.faces);
    const PackingMetric after =
        initial_packing(moved, euclidean_edge_lengths(moved));
    const std::vector<double> zero(mesh.num_vertices(), 0.0);
    const auto cf_before = conformal_factor(before, zero);
    const auto cf_after = conformal_factor(after, zero);
    for (int v = 0; v < mesh.num_vertices(); ++v)
      CHECK(cf_before[v] == doctest::Approx(cf_after[v]).epsilon(1e-9));
  }
}

TEST_CASE("extract_features") {
  SUBCASE("flat disk: near-zero interior curvature and small distortion") {
    const TriMesh disk = make_disk(4);
    const EdgeLengths lengths = euclidean_edge_lengths(disk);
    const PackingMetric metric = initial_packing(disk, lengths);
    const FlowState state =
        ricci_flow(disk, metric, default_target_curvature(disk, lengths));
    REQUIRE(state.converged);
    const FeatureFields fields = extract_features(disk, lengths, state, metric);
    for (int v = 0; v < disk.num_vertices(); ++v) {
      if (!disk.boundary_vertex[v]) {
        CHECK(std::abs(fields.gaussian_curvature[v]) < 1e-9);
        // the flow is only near-identity: the boundary target rounds the
        // hexagonal rim, which moves one-ring areas at the percent level
        CHECK(std::abs(fields.area_distortion[v]) < 0.05);
      }
    }
  }
  SUBCASE("spherical cap has strictly positive interior curvature") {
    TriMesh cap = make_disk(5);
    const double sphere_r = 1.5;
    for (Vec3& p : cap.vertices) {
      const double r2 = p[0] * p[0] + p[1] * p[1];
      p[2] = std::sqrt(sphere_r * sphere_r - r2) - sphere_r;
    }
    const TriMesh lifted = build_mesh(cap.vertices, cap.faces);
    const auto k =
        gaussian_curvature(lifted, euclidean_edge_lengths(lifted));
    for (int v = 0; v < lifted.num_vertices(); ++v)
      if (!lifted.boundary_vertex[v]) CHECK(k[v] > 0);
  }
  SUBCASE("fields survive a CSV round trip") {
    const TriMesh tri = equilateral_triangle();
    const PackingMetric metric = initial_packing(tri, {1, 1, 1});
    FlowState state;
    state.u = {0, 0, 0};
    state.lengths = {2, 2, 2};
    const FeatureFields fields = extract_features(tri, {1, 1, 1}, state, metric);
    const auto path =
        std::filesystem::temp_directory_path() / "riccimorph_fields.csv";
    save_fields_csv(fields, path.string());
    const FeatureFields back = load_fields_csv(path.string());
    for (int v = 0; v < 3; ++v) {
      CHECK(back.area_distortion[v] == fields.area_distortion[v]);
      CHECK(back.conformal_factor[v] == fields.conformal_factor[v]);
      CHECK(back.gaussian_curvature[v] == fields.gaussian_curvature[v]);
    }
  }
}

}  // TEST_SUITE
