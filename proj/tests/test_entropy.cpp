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

#include <algorithm>
#include <cmath>
#include <random>

#include "riccimorph/entropy.hpp"
#include "riccimorph/errors.hpp"

using namespace riccimorph;

namespace {

FeatureFields constant_fields(int n, double value) {
  FeatureFields f;
  f.area_distortion.assign(n, value);
  f.conformal_factor.assign(n, value);
  f.gaussian_curvature.assign(n, value);
  return f;
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("histogram probabilities") {
  SUBCASE("constant values occupy one bin") {
    const auto p = histogram_probabilities(std::vector<double>(9, 0.4),
                                           {8, 0, 1, ""});
    CHECK(std::count(p.begin(), p.end(), 0.0) == 7);
    CHECK(*std::max_element(p.begin(), p.end()) == 1.0);
  }
  SUBCASE("two values split two bins evenly") {
    const auto p = histogram_probabilities({0.1, 0.9}, {2, 0, 1, ""});
    CHECK(p[0] == 0.5);
    CHECK(p[1] == 0.5);
  }
  SUBCASE("uniform samples fill four bins evenly") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> values(1000);
    for (double& v : values) v = u(rng);
    const auto p = histogram_probabilities(values, {4, 0, 1, ""});
    for (double pi : p) CHECK(std::abs(pi - 0.25) < 0.05);
  }
  SUBCASE("out-of-range values clamp into the end bins") {
    const auto p = histogram_probabilities({-5, 0.5, 99}, {3, 0, 1, ""});
    CHECK(p[0] == doctest::Approx(1.0 / 3));
    CHECK(p[1] == doctest::Approx(1.0 / 3));
    CHECK(p[2] == doctest::Approx(1.0 / 3));
  }
  SUBCASE("probabilities always sum to one") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0, 2);
    std::vector<double> values(501);
    for (double& v : values) v = g(rng);
    const auto p = histogram_probabilities(values, {16, -1, 1, ""});
    double sum = 0;
    for (double pi : p) sum += pi;
    CHECK(std::abs(sum - 1) < 1e-12);
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(histogram_probabilities({}, {4, 0, 1, ""}), ConfigError);
    CHECK_THROWS_AS(histogram_probabilities({1.0}, {0, 0, 1, ""}),
                    ConfigError);
    CHECK_THROWS_AS(histogram_probabilities({1.0}, {4, 1, 1, ""}),
                    ConfigError);
  }
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy({1.0}) == 0.0);
  CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) == 2.0);
  CHECK(shannon_entropy({0.5, 0.25, 0.25}) == doctest::Approx(1.5));
  CHECK(shannon_entropy({0.5, 0.5, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(shannon_entropy({0.5, 0.2}), StatsError);
  CHECK_THROWS_AS(shannon_entropy({1.5, -0.5}), StatsError);
}

TEST_CASE("fit_range") {
  SUBCASE("widens the span by 1% on each side") {
    FeatureFields f = constant_fields(2, 0);
    f.area_distortion = {-1.0, 1.0};
    const auto [lo, hi] = fit_range({&f}, Feature::kAreaDistortion);
    CHECK(lo == doctest::Approx(-1.02).epsilon(1e-12));
    CHECK(hi == doctest::Approx(1.02).epsilon(1e-12));
  }
  SUBCASE("covers all training subjects") {
    FeatureFields a = constant_fields(2, 0), b = constant_fields(2, 0);
    a.conformal_factor = {0.0, 1.0};
    b.conformal_factor = {2.0, 3.0};
    const auto [lo, hi] = fit_range({&a, &b}, Feature::kConformalFactor);
    CHECK(lo == doctest::Approx(-0.03).epsilon(1e-12));
    CHECK(hi == doctest::Approx(3.03).epsilon(1e-12));
  }
  SUBCASE("constant features are degenerate") {
    FeatureFields f = constant_fields(5, 0.7);
    CHECK_THROWS_AS(fit_range({&f}, Feature::kGaussianCurvature), StatsError);
  }
}

TEST_CASE("encode_subject") {
  const std::array<BinningSpec, 3> specs{BinningSpec{4, -1, 1, "Scale 1"},
                                         BinningSpec{4, -1, 1, "Scale 1"},
                                         BinningSpec{4, -1, 1, "Scale 1"}};
  SUBCASE("constant fields encode to zeros") {
    const FeatureFields f = constant_fields(10, 0.25);
    const FeatureVector fv = encode_subject("s0", "CN", {&f}, specs);
    CHECK(fv.values == std::vector<double>{0, 0, 0});
  }
  SUBCASE("two regions concatenate in order") {
    const FeatureFields a = constant_fields(10, 0.25);
    FeatureFields b = constant_fields(10, 0.25);
    b.area_distortion[0] = 0.9;  // push one value into another bin
    const FeatureVector fv = encode_subject("s0", "AD", {&a, &b}, specs);
    REQUIRE(fv.values.size() == 6);
    CHECK(fv.values[0] == 0.0);
    CHECK(fv.values[3] > 0.0);
  }
  SUBCASE("vertex order does not matter") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    FeatureFields f = constant_fields(64, 0);
    for (double& v : f.area_distortion) v = u(rng);
    for (double& v : f.conformal_factor) v = u(rng);
    for (double& v : f.gaussian_curvature) v = u(rng);
    FeatureFields shuffled = f;
    std::shuffle(shuffled.area_distortion.begin(),
                 shuffled.area_distortion.end(), rng);
    std::shuffle(shuffled.conformal_factor.begin(),
                 shuffled.conformal_factor.end(), rng);
    std::shuffle(shuffled.gaussian_curvature.begin(),
                 shuffled.gaussian_curvature.end(), rng);
    const FeatureVector original = encode_subject("s", "AD", {&f}, specs);
    const FeatureVector permuted =
        encode_subject("s", "AD", {&shuffled}, specs);
    for (int i = 0; i < 3; ++i) CHECK(original.values[i] == permuted.values[i]);
  }
}

TEST_CASE("entropy bounds and bin refinement") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0, 1);
  std::vector<double> values(300);
  for (double& v : values) v = g(rng);
  SUBCASE("entropy stays within [0, log2(bins)]") {
    for (int bins : {1, 2, 4, 16, 64}) {
      const double e = shannon_entropy(
          histogram_probabilities(values, {bins, -2, 2, ""}));
      CHECK(e >= 0.0);
      CHECK(e <= std::log2(double(bins)) + 1e-12);
    }
  }
  SUBCASE("nested refinement cannot decrease entropy") {
    const double coarse =
        shannon_entropy(histogram_probabilities(values, {2, -2, 2, ""}));
    const double fine =
        shannon_entropy(histogram_probabilities(values, {4, -2, 2, ""}));
    CHECK(fine >= coarse - 1e-12);
  }
}

}  // TEST_SUITE
