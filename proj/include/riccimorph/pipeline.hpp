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

#include <cstdint>
#include <string>
#include <vector>

namespace riccimorph {

/// End-to-end experiment definition. A JSON config file uses the same key
/// names; command-line flags override file values.
struct PipelineConfig {
  std::string manifest;
  std::string out_dir = "out";
  double epsilon = 1e-6;
  int max_iters = 64;
  std::vector<int> scales = {4, 16, 64};  // bin counts, named Scale 1..N
  std::vector<std::string> classifiers = {"lr", "knn", "mlp"};
  int repeats = 20;
  double train_frac = 0.8;
  uint64_t seed = 42;
  int workers = 0;  // 0 = logical cores
  bool trace = false;
  int subjects = 160;  // synth cohort size (total, balanced)
  int rings = 16;      // synth mesh resolution
};

/// Reads a config JSON file. Unknown keys are a ConfigError.
PipelineConfig load_config_file(const std::string& path);
void validate_config(const PipelineConfig& cfg);

/// Generates the synthetic cohort under cfg.out_dir and points
/// cfg.manifest at the written manifest. Returns 0.
int run_synth(PipelineConfig& cfg);

/// Runs boundary detection, packing, flow, embedding and feature
/// extraction for every manifest region. Per-mesh failures are isolated
/// and recorded in failures.csv; returns 1 if any region failed, else 0.
int run_features(const PipelineConfig& cfg);

/// Entropy encoding and the repeated-split evaluation for every scale and
/// classifier; writes report.json/report.csv plus confusion, ROC and
/// Welch-test tables. Returns 0.
int run_classify(const PipelineConfig& cfg);

/// synth + features + classify; returns the worst step status.
int run_all(PipelineConfig cfg);

/// Path of the per-region feature fields CSV under an output directory.
std::string fields_csv_path(const std::string& out_dir,
                            const std::string& subject,
                            const std::string& region);

}  // namespace riccimorph
