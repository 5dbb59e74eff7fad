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

#include "riccimorph/features.hpp"

namespace riccimorph {

enum class Feature { kAreaDistortion = 0, kConformalFactor = 1,
                     kGaussianCurvature = 2 };

inline const char* feature_tag(Feature f) {
  switch (f) {
    case Feature::kAreaDistortion: return "AD";
    case Feature::kConformalFactor: return "CF";
    default: return "K";
  }
}

/// Equal-width binning over a fixed range. Out-of-range values clamp into
/// the end bins, so encodings stay bounded under distribution shift.
struct BinningSpec {
  int n_bins = 4;
  double lo = 0;
  double hi = 1;
  std::string scale_name;  // "Scale 1", "Scale 2", ...
};

/// Entropies [AD, CF, K] per region, regions concatenated in manifest
/// order. Every entry lies in [0, log2(n_bins)].
struct FeatureVector {
  std::string subject_id;
  std::string label;
  std::vector<double> values;
};

/// Bin occupation probabilities n_i / n. Throws ConfigError for an invalid
/// spec or empty input.
std::vector<double> histogram_probabilities(const std::vector<double>& values,
                                            const BinningSpec& spec);

/// Shannon entropy in bits, with 0 * log 0 taken as 0. Throws StatsError
/// if the input is not a probability distribution.
double shannon_entropy(const std::vector<double>& p);

/// Min/max of the feature over all training fields, widened by 1% of the
/// span on each side. Throws StatsError when the span is zero.
std::pair<double, double> fit_range(
    const std::vector<const FeatureFields*>& training, Feature feature);

/// One entropy per (region, feature), in region-major order.
FeatureVector encode_subject(const std::string& subject_id,
                             const std::string& label,
                             const std::vector<const FeatureFields*>& regions,
                             const std::array<BinningSpec, 3>& specs);

/// CSV with one row per subject and columns {region}_{AD|CF|K}_entropy.
void save_feature_vectors_csv(const std::vector<FeatureVector>& vectors,
                              const std::vector<std::string>& region_names,
                              const std::string& path);

/// The binning specs as JSON, persisted next to the vectors they encode.
void save_binning_json(const std::array<BinningSpec, 3>& specs,
                       const std::string& path);

}  // namespace riccimorph
