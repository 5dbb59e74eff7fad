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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riccimorph/errors.hpp"
#include "riccimorph/pipeline.hpp"

namespace {

// Flags are collected separately from the config file so that explicitly
// provided flags win over file values.
struct Flags {
  std::string config;
  riccimorph::PipelineConfig values;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config, "JSON config file");
  cmd->add_option("--manifest", flags.values.manifest, "cohort manifest CSV");
  cmd->add_option("--out", flags.values.out_dir, "output directory");
  cmd->add_option("--epsilon", flags.values.epsilon,
                  "flow convergence threshold");
  cmd->add_option("--max-iters", flags.values.max_iters,
                  "maximum Newton iterations");
  cmd->add_option("--scales", flags.values.scales,
                  "bin counts, one per scale")
      ->delimiter(',');
  cmd->add_option("--classifiers", flags.values.classifiers,
                  "classifiers to evaluate (lr,knn,mlp)")
      ->delimiter(',');
  cmd->add_option("--repeats", flags.values.repeats,
                  "number of train/test splits");
  cmd->add_option("--train-frac", flags.values.train_frac,
                  "training fraction per split");
  cmd->add_option("--seed", flags.values.seed, "root random seed");
  cmd->add_option("--workers", flags.values.workers,
                  "worker threads (0 = logical cores)");
  cmd->add_flag("--trace", flags.values.trace,
                "write per-iteration flow traces");
  cmd->add_option("--subjects", flags.values.subjects,
                  "synthetic cohort size");
  cmd->add_option("--rings", flags.values.rings,
                  "synthetic mesh resolution (rings)");
}

riccimorph::PipelineConfig merge(const CLI::App* cmd, const Flags& flags) {
  riccimorph::PipelineConfig cfg;
  if (!flags.config.empty())
    cfg = riccimorph::load_config_file(flags.config);
  const auto take = [&](const char* name, auto member) {
    if (cmd->count(name) > 0) cfg.*member = flags.values.*member;
  };
  take("--manifest", &riccimorph::PipelineConfig::manifest);
  take("--out", &riccimorph::PipelineConfig::out_dir);
  take("--epsilon", &riccimorph::PipelineConfig::epsilon);
  take("--max-iters", &riccimorph::PipelineConfig::max_iters);
  take("--scales", &riccimorph::PipelineConfig::scales);
  take("--classifiers", &riccimorph::PipelineConfig::classifiers);
  take("--repeats", &riccimorph::PipelineConfig::repeats);
  take("--train-frac", &riccimorph::PipelineConfig::train_frac);
  take("--seed", &riccimorph::PipelineConfig::seed);
  take("--workers", &riccimorph::PipelineConfig::workers);
  take("--trace", &riccimorph::PipelineConfig::trace);
  take("--subjects", &riccimorph::PipelineConfig::subjects);
  take("--rings", &riccimorph::PipelineConfig::rings);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal morphometry pipeline: Ricci-flow parameterization, "
               "entropy features, and classification"};
  app.require_subcommand(1);

  Flags synth_flags, features_flags, classify_flags, all_flags;
  CLI::App* synth =
      app.add_subcommand("synth", "generate a synthetic two-class cohort");
  add_common_options(synth, synth_flags);
  CLI::App* features = app.add_subcommand(
      "features", "flow every manifest mesh and extract feature fields");
  add_common_options(features, features_flags);
  CLI::App* classify = app.add_subcommand(
      "classify", "entropy encoding and repeated-split evaluation");
  add_common_options(classify, classify_flags);
  CLI::App* all =
      app.add_subcommand("run-all", "synth, features, and classify");
  add_common_options(all, all_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      riccimorph::PipelineConfig cfg = merge(synth, synth_flags);
      return riccimorph::run_synth(cfg);
    }
    if (features->parsed()) {
      return riccimorph::run_features(merge(features, features_flags));
    }
    if (classify->parsed()) {
      return riccimorph::run_classify(merge(classify, classify_flags));
    }
    return riccimorph::run_all(merge(all, all_flags));
  } catch (const riccimorph::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const riccimorph::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
