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

#include "riccimorph/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "riccimorph/errors.hpp"
#include "riccimorph/tolerances.hpp"

namespace riccimorph {

namespace {

const std::vector<double>& field_of(const FeatureFields& fields, Feature f) {
  switch (f) {
    case Feature::kAreaDistortion: return fields.area_distortion;
    case Feature::kConformalFactor: return fields.conformal_factor;
    default: return fields.gaussian_curvature;
  }
}

}  // namespace

std::vector<double> histogram_probabilities(const std::vector<double>& values,
                                            const BinningSpec& spec) {
  if (spec.n_bins < 1)
    throw ConfigError("binning spec needs at least one bin");
  if (!(spec.lo < spec.hi))
    throw ConfigError("binning range is empty: [" + std::to_string(spec.lo) +
                      ", " + std::to_string(spec.hi) + ")");
  if (values.empty())
    throw ConfigError("cannot bin an empty value set");
  std::vector<double> counts(spec.n_bins, 0.0);
  const double width = (spec.hi - spec.lo) / spec.n_bins;
  for (double x : values) {
    int bin = static_cast<int>(std::floor((x - spec.lo) / width));
    bin = std::clamp(bin, 0, spec.n_bins - 1);
    counts[bin] += 1;
  }
  const double n = static_cast<double>(values.size());
  for (double& c : counts) c /= n;
  return counts;
}

double shannon_entropy(const std::vector<double>& p) {
  if (p.empty()) throw StatsError("empty distribution");
  double sum = 0;
  for (double pi : p) {
    if (pi < 0) throw StatsError("negative probability");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > kProbSumEps)
    throw StatsError("probabilities sum to " + std::to_string(sum));
  double entropy = 0;
  for (double pi : p)
    if (pi > 0) entropy -= pi * std::log2(pi);
  return entropy;
}

std::pair<double, double> fit_range(
    const std::vector<const FeatureFields*>& training, Feature feature) {
  if (training.empty()) throw ConfigError("no training fields for fit_range");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const FeatureFields* f : training) {
    for (double x : field_of(*f, feature)) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const double span = hi - lo;
  if (!(span > 0))
    throw StatsError(std::string("degenerate range for feature ") +
                     feature_tag(feature) + ": all values equal " +
                     std::to_string(lo));
  return {lo - 0.01 * span, hi + 0.01 * span};
}

FeatureVector encode_subject(const std::string& subject_id,
                             const std::string& label,
                             const std::vector<const FeatureFields*>& regions,
                             const std::array<BinningSpec, 3>& specs) {
  FeatureVector fv;
  fv.subject_id = subject_id;
  fv.label = label;
  fv.values.reserve(regions.size() * 3);
  for (const FeatureFields* region : regions) {
    for (int f = 0; f < 3; ++f) {
      const auto& values = field_of(*region, static_cast<Feature>(f));
      fv.values.push_back(
          shannon_entropy(histogram_probabilities(values, specs[f])));
    }
  }
  return fv;
}

void save_feature_vectors_csv(const std::vector<FeatureVector>& vectors,
                              const std::vector<std::string>& region_names,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << "subject_id,label";
  for (const std::string& region : region_names)
    for (const char* tag : {"AD", "CF", "K"})
      out << ',' << region << '_' << tag << "_entropy";
  out << '\n';
  char buf[48];
  for (const FeatureVector& fv : vectors) {
    out << fv.subject_id << ',' << fv.label;
    for (double v : fv.values) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out << buf;
    }
    out << '\n';
  }
}

void save_binning_json(const std::array<BinningSpec, 3>& specs,
                       const std::string& path) {
  nlohmann::json doc;
  for (int f = 0; f < 3; ++f) {
    doc[feature_tag(static_cast<Feature>(f))] = {
        {"n_bins", specs[f].n_bins},
        {"lo", specs[f].lo},
        {"hi", specs[f].hi},
        {"scale_name", specs[f].scale_name},
    };
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace riccimorph
