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

#include "riccimorph/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "riccimorph/entropy.hpp"
#include "riccimorph/errors.hpp"
#include "riccimorph/features.hpp"
#include "riccimorph/layout.hpp"
#include "riccimorph/mesh.hpp"
#include "riccimorph/ml.hpp"
#include "riccimorph/packing.hpp"
#include "riccimorph/parallel.hpp"
#include "riccimorph/ricci.hpp"
#include "riccimorph/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace riccimorph {

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return path;
  return (fs::path(base_dir) / p).string();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(const std::vector<FlowTraceRow>& trace,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << "iteration,residual,lambda\n";
  for (const FlowTraceRow& row : trace)
    out << row.iteration << ',' << fmt(row.residual) << ',' << fmt(row.lambda)
        << '\n';
}

// Manifest rows grouped per subject, order of first appearance preserved.
struct Subject {
  std::string id;
  std::string label;
  std::vector<const ManifestRow*> regions;
};

std::vector<Subject> group_subjects(const std::vector<ManifestRow>& rows) {
  std::vector<Subject> subjects;
  std::map<std::string, size_t> index;
  for (const ManifestRow& row : rows) {
    auto [it, inserted] = index.try_emplace(row.subject_id, subjects.size());
    if (inserted) subjects.push_back({row.subject_id, row.label, {}});
    Subject& s = subjects[it->second];
    if (s.label != row.label)
      throw ConfigError("subject " + row.subject_id +
                        " has inconsistent labels in the manifest");
    s.regions.push_back(&row);
  }
  // a uniform region sequence is required for feature-vector columns
  for (const Subject& s : subjects) {
    if (s.regions.size() != subjects[0].regions.size())
      throw ConfigError("subject " + s.id + " has " +
                        std::to_string(s.regions.size()) +
                        " regions, expected " +
                        std::to_string(subjects[0].regions.size()));
    for (size_t r = 0; r < s.regions.size(); ++r)
      if (s.regions[r]->region != subjects[0].regions[r]->region)
        throw ConfigError("subject " + s.id +
                          " region order differs from the manifest head");
  }
  return subjects;
}

std::array<BinningSpec, 3> make_specs(
    const std::vector<const FeatureFields*>& training, int bins,
    const std::string& scale_name) {
  std::array<BinningSpec, 3> specs;
  for (int f = 0; f < 3; ++f) {
    const auto [lo, hi] = fit_range(training, static_cast<Feature>(f));
    specs[f] = {bins, lo, hi, scale_name};
  }
  return specs;
}

struct ScaleOutcome {
  std::string name;
  int bins = 0;
  EvalReport report;
};

json metric_json(double mean, double stddev) {
  return json{{"mean", mean}, {"std", stddev}};
}

}  // namespace

std::string fields_csv_path(const std::string& out_dir,
                            const std::string& subject,
                            const std::string& region) {
  return (fs::path(out_dir) / "fields" / (subject + "_" + region + ".csv"))
      .string();
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("bad config JSON in " + path + ": " + e.what());
  }
  PipelineConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "manifest") cfg.manifest = value.get<std::string>();
      else if (key == "out") cfg.out_dir = value.get<std::string>();
      else if (key == "epsilon") cfg.epsilon = value.get<double>();
      else if (key == "max_iters") cfg.max_iters = value.get<int>();
      else if (key == "scales") cfg.scales = value.get<std::vector<int>>();
      else if (key == "classifiers")
        cfg.classifiers = value.get<std::vector<std::string>>();
      else if (key == "repeats") cfg.repeats = value.get<int>();
      else if (key == "train_frac") cfg.train_frac = value.get<double>();
      else if (key == "seed") cfg.seed = value.get<uint64_t>();
      else if (key == "workers") cfg.workers = value.get<int>();
      else if (key == "trace") cfg.trace = value.get<bool>();
      else if (key == "subjects") cfg.subjects = value.get<int>();
      else if (key == "rings") cfg.rings = value.get<int>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const json::exception& e) {
      throw ConfigError("bad value for config key '" + key + "': " +
                        e.what());
    }
  }
  return cfg;
}

void validate_config(const PipelineConfig& cfg) {
  if (cfg.scales.empty()) throw ConfigError("at least one scale is required");
  for (int bins : cfg.scales)
    if (bins < 1) throw ConfigError("scale bin counts must be positive");
  if (cfg.classifiers.empty())
    throw ConfigError("at least one classifier is required");
  for (const std::string& name : cfg.classifiers)
    classifier_spec_from_name(name);  // throws on unknown names
  if (cfg.repeats < 1) throw ConfigError("repeats must be at least 1");
  if (!(cfg.train_frac > 0 && cfg.train_frac < 1))
    throw ConfigError("train_frac must lie in (0, 1)");
  if (cfg.epsilon <= 0) throw ConfigError("epsilon must be positive");
  if (cfg.max_iters < 1) throw ConfigError("max_iters must be at least 1");
  if (cfg.subjects < 2) throw ConfigError("subjects must be at least 2");
  if (cfg.rings < 1) throw ConfigError("rings must be at least 1");
}

int run_synth(PipelineConfig& cfg) {
  validate_config(cfg);
  fs::create_directories(cfg.out_dir);
  CohortOptions opts;
  opts.subjects = cfg.subjects;
  opts.rings = cfg.rings;
  opts.seed = cfg.seed;
  cfg.manifest = write_cohort(opts, cfg.out_dir);
  std::cout << "wrote " << cfg.subjects * 2 << " meshes and "
            << cfg.manifest << "\n";
  return 0;
}

int run_features(const PipelineConfig& cfg) {
  validate_config(cfg);
  if (cfg.manifest.empty()) throw ConfigError("features: --manifest required");
  const std::vector<ManifestRow> rows = read_manifest(cfg.manifest);
  const std::string base = fs::path(cfg.manifest).parent_path().string();
  fs::create_directories(fs::path(cfg.out_dir) / "fields");
  fs::create_directories(fs::path(cfg.out_dir) / "embeddings");
  if (cfg.trace) fs::create_directories(fs::path(cfg.out_dir) / "traces");

  std::vector<std::string> failures(rows.size());
  parallel_for(static_cast<int>(rows.size()), cfg.workers, [&](int i) {
    const ManifestRow& row = rows[i];
    try {
      const TriMesh mesh = load_mesh(resolve(base, row.path));
      const EdgeLengths initial = euclidean_edge_lengths(mesh);
      const std::vector<double> target =
          default_target_curvature(mesh, initial);
      const PackingMetric metric = initial_packing(mesh, initial);
      FlowOptions opts;
      opts.epsilon = cfg.epsilon;
      opts.max_iters = cfg.max_iters;
      opts.collect_trace = cfg.trace;
      const FlowState flow = ricci_flow(mesh, metric, target, opts);
      if (cfg.trace)
        write_trace_csv(flow.trace,
                        (fs::path(cfg.out_dir) / "traces" /
                         (row.subject_id + "_" + row.region + ".csv"))
                            .string());
      if (!flow.converged)
        throw FlowError("flow did not converge: residual " +
                        std::to_string(flow.residual) + " after " +
                        std::to_string(flow.iterations) + " iterations");
      const PlanarEmbedding embedding = embed_plane(mesh, flow.lengths);
      const FeatureFields fields =
          extract_features(mesh, initial, flow, metric);
      save_fields_csv(fields,
                      fields_csv_path(cfg.out_dir, row.subject_id, row.region));
      const std::string stem =
          (fs::path(cfg.out_dir) / "embeddings" /
           (row.subject_id + "_" + row.region))
              .string();
      save_embedding_csv(embedding, stem + ".csv");
      save_embedding_obj(mesh, embedding, stem + ".obj");
      save_circles_csv(embedding, current_radii(metric, flow.u),
                       stem + "_circles.csv");
    } catch (const std::exception& e) {
      std::string what = e.what();
      std::replace(what.begin(), what.end(), ',', ';');
      failures[i] = what;
    }
  });

  std::ofstream flog((fs::path(cfg.out_dir) / "failures.csv").string());
  flog << "subject_id,region,error\n";
  int failed = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (failures[i].empty()) continue;
    ++failed;
    flog << rows[i].subject_id << ',' << rows[i].region << ',' << failures[i]
         << '\n';
    std::cerr << "FAILED " << rows[i].subject_id << '/' << rows[i].region
              << ": " << failures[i] << "\n";
  }
  std::cout << "features: " << rows.size() - failed << "/" << rows.size()
            << " regions complete\n";
  return failed == 0 ? 0 : 1;
}

int run_classify(const PipelineConfig& cfg) {
  validate_config(cfg);
  if (cfg.manifest.empty()) throw ConfigError("classify: --manifest required");
  const std::vector<ManifestRow> rows = read_manifest(cfg.manifest);
  std::vector<Subject> subjects = group_subjects(rows);

  // Subjects recorded as failed by the features stage are excluded;
  // any other missing fields file is a hard error.
  std::set<std::string> failed_subjects;
  {
    std::ifstream flog((fs::path(cfg.out_dir) / "failures.csv").string());
    std::string line;
    if (flog && std::getline(flog, line)) {
      while (std::getline(flog, line)) {
        const size_t comma = line.find(',');
        if (comma != std::string::npos)
          failed_subjects.insert(line.substr(0, comma));
      }
    }
  }
  std::vector<Subject> kept;
  std::vector<std::string> missing;
  for (Subject& s : subjects) {
    bool complete = true;
    for (const ManifestRow* r : s.regions)
      if (!fs::exists(fields_csv_path(cfg.out_dir, s.id, r->region)))
        complete = false;
    if (complete) {
      kept.push_back(std::move(s));
    } else if (failed_subjects.count(s.id)) {
      std::cerr << "skipping failed subject " << s.id << "\n";
    } else {
      missing.push_back(s.id);
    }
  }
  if (!missing.empty()) {
    std::string names;
    for (const std::string& id : missing) names += " " + id;
    throw ConfigError("missing feature files for subjects:" + names);
  }
  if (kept.empty()) throw ConfigError("no subjects with features");

  const size_t n_regions = kept[0].regions.size();
  std::vector<std::string> region_names;
  for (const ManifestRow* r : kept[0].regions)
    region_names.push_back(r->region);

  // all fields in memory: subjects x regions
  std::vector<std::vector<FeatureFields>> fields(kept.size());
  parallel_for(static_cast<int>(kept.size()), cfg.workers, [&](int i) {
    fields[i].reserve(n_regions);
    for (const ManifestRow* r : kept[i].regions)
      fields[i].push_back(
          load_fields_csv(fields_csv_path(cfg.out_dir, kept[i].id, r->region)));
  });
  std::vector<int> labels(kept.size());
  for (size_t i = 0; i < kept.size(); ++i)
    labels[i] = kept[i].label == "AD" ? kLabelAd : kLabelCn;

  std::vector<ClassifierSpec> specs;
  for (const std::string& name : cfg.classifiers)
    specs.push_back(classifier_spec_from_name(name));

  const auto region_ptrs = [&](int i) {
    std::vector<const FeatureFields*> ptrs;
    for (const FeatureFields& f : fields[i]) ptrs.push_back(&f);
    return ptrs;
  };

  std::vector<ScaleOutcome> outcomes;
  for (size_t si = 0; si < cfg.scales.size(); ++si) {
    ScaleOutcome outcome;
    outcome.bins = cfg.scales[si];
    outcome.name = "Scale " + std::to_string(si + 1);

    // cohort-fitted encoding, exported for inspection
    std::vector<const FeatureFields*> all_fields;
    for (size_t i = 0; i < kept.size(); ++i)
      for (const FeatureFields& f : fields[i]) all_fields.push_back(&f);
    const auto cohort_specs =
        make_specs(all_fields, outcome.bins, outcome.name);
    std::vector<FeatureVector> cohort_vectors;
    for (size_t i = 0; i < kept.size(); ++i)
      cohort_vectors.push_back(encode_subject(kept[i].id, kept[i].label,
                                              region_ptrs(i), cohort_specs));
    const std::string tag = "scale" + std::to_string(si + 1);
    save_feature_vectors_csv(
        cohort_vectors, region_names,
        (fs::path(cfg.out_dir) / ("entropy_" + tag + ".csv")).string());
    save_binning_json(
        cohort_specs,
        (fs::path(cfg.out_dir) / ("binning_" + tag + ".json")).string());

    // leakage-free evaluation: ranges refitted on each training split
    SplitOptions split_opts;
    split_opts.train_frac = cfg.train_frac;
    split_opts.repeats = cfg.repeats;
    split_opts.seed = cfg.seed;
    split_opts.workers = cfg.workers;
    const int bins = outcome.bins;
    const std::string scale_name = outcome.name;
    const DatasetBuilder builder = [&, bins, scale_name](
                                       const std::vector<int>& train_idx,
                                       const std::vector<int>& test_idx) {
      std::vector<const FeatureFields*> training;
      for (int i : train_idx)
        for (const FeatureFields& f : fields[i]) training.push_back(&f);
      const auto split_specs = make_specs(training, bins, scale_name);
      Dataset train, test;
      for (int i : train_idx) {
        train.x.push_back(
            encode_subject(kept[i].id, kept[i].label, region_ptrs(i),
                           split_specs)
                .values);
        train.y.push_back(labels[i]);
      }
      for (int i : test_idx) {
        test.x.push_back(
            encode_subject(kept[i].id, kept[i].label, region_ptrs(i),
                           split_specs)
                .values);
        test.y.push_back(labels[i]);
      }
      return std::make_pair(train, test);
    };
    outcome.report = repeated_splits_with_builder(
        static_cast<int>(kept.size()), labels, split_opts, specs, builder);
    outcomes.push_back(std::move(outcome));
  }

  // ---- reports ----
  json report;
  report["seed"] = cfg.seed;
  report["repeats"] = cfg.repeats;
  report["train_frac"] = cfg.train_frac;
  report["epsilon"] = cfg.epsilon;
  report["max_iters"] = cfg.max_iters;
  report["subjects"] = json::array();
  for (const Subject& s : kept) report["subjects"].push_back(s.id);
  report["scales"] = json::array();

  std::ofstream table((fs::path(cfg.out_dir) / "report.csv").string());
  table << "classifier,scale,accuracy_mean,accuracy_std,precision_mean,"
           "precision_std,recall_mean,recall_std,f1_mean,f1_std,"
           "specificity_mean,specificity_std\n";
  std::ofstream confusion((fs::path(cfg.out_dir) / "confusion.csv").string());
  confusion << "classifier,scale,split,tp,tn,fp,fn\n";
  std::ofstream roc_csv((fs::path(cfg.out_dir) / "roc.csv").string());
  roc_csv << "classifier,scale,fpr,tpr\n";
  std::ofstream ttests((fs::path(cfg.out_dir) / "ttests.csv").string());
  ttests << "scale,baseline,model,t,dof,p,significant\n";

  json welch_json = json::array();
  for (const ScaleOutcome& outcome : outcomes) {
    json scale_json;
    scale_json["name"] = outcome.name;
    scale_json["bins"] = outcome.bins;
    scale_json["classifiers"] = json::array();
    for (const ClassifierReport& cr : outcome.report.classifiers) {
      json cj;
      cj["name"] = cr.name;
      cj["accuracy"] = metric_json(cr.mean.accuracy, cr.stddev.accuracy);
      cj["precision"] = metric_json(cr.mean.precision, cr.stddev.precision);
      cj["recall"] = metric_json(cr.mean.sensitivity, cr.stddev.sensitivity);
      cj["f1"] = metric_json(cr.mean.f1, cr.stddev.f1);
      cj["specificity"] =
          metric_json(cr.mean.specificity, cr.stddev.specificity);
      cj["auc"] = cr.roc.auc;
      cj["roc_split"] = cr.roc_split;
      cj["accuracy_samples"] = cr.accuracy_samples;
      scale_json["classifiers"].push_back(cj);

      table << cr.name << ',' << outcome.name << ','
            << fmt(cr.mean.accuracy) << ',' << fmt(cr.stddev.accuracy) << ','
            << fmt(cr.mean.precision) << ',' << fmt(cr.stddev.precision)
            << ',' << fmt(cr.mean.sensitivity) << ','
            << fmt(cr.stddev.sensitivity) << ',' << fmt(cr.mean.f1) << ','
            << fmt(cr.stddev.f1) << ',' << fmt(cr.mean.specificity) << ','
            << fmt(cr.stddev.specificity) << '\n';
      for (size_t s = 0; s < cr.per_split.size(); ++s) {
        const ConfusionMatrix& cm = cr.per_split[s].cm;
        confusion << cr.name << ',' << outcome.name << ',' << s << ','
                  << cm.tp << ',' << cm.tn << ',' << cm.fp << ',' << cm.fn
                  << '\n';
      }
      for (const RocPoint& p : cr.roc.points)
        roc_csv << cr.name << ',' << outcome.name << ',' << fmt(p.fpr) << ','
                << fmt(p.tpr) << '\n';
    }
    report["scales"].push_back(scale_json);

    // Welch tests against the best-mean-accuracy classifier
    size_t baseline = 0;
    for (size_t c = 1; c < outcome.report.classifiers.size(); ++c)
      if (outcome.report.classifiers[c].mean.accuracy >
          outcome.report.classifiers[baseline].mean.accuracy)
        baseline = c;
    const ClassifierReport& base_cr = outcome.report.classifiers[baseline];
    json scale_welch;
    scale_welch["scale"] = outcome.name;
    scale_welch["baseline"] = base_cr.name;
    scale_welch["comparisons"] = json::array();
    for (size_t c = 0; c < outcome.report.classifiers.size(); ++c) {
      if (c == baseline) continue;
      const ClassifierReport& cr = outcome.report.classifiers[c];
      json comparison;
      comparison["model"] = cr.name;
      try {
        const WelchResult w =
            welch_t_test(base_cr.accuracy_samples, cr.accuracy_samples);
        comparison["t"] = w.t;
        comparison["dof"] = w.dof;
        comparison["p"] = w.p;
        comparison["significant"] = w.p < 0.05;
        ttests << outcome.name << ',' << base_cr.name << ',' << cr.name << ','
               << fmt(w.t) << ',' << fmt(w.dof) << ',' << fmt(w.p) << ','
               << (w.p < 0.05 ? "yes" : "no") << '\n';
      } catch (const StatsError&) {
        // both samples constant: left blank, as in the reference protocol
        comparison["degenerate"] = true;
        ttests << outcome.name << ',' << base_cr.name << ',' << cr.name
               << ",,,,\n";
      }
      scale_welch["comparisons"].push_back(comparison);
    }
    welch_json.push_back(scale_welch);
  }
  report["welch"] = welch_json;

  std::ofstream rj((fs::path(cfg.out_dir) / "report.json").string());
  rj << report.dump(2) << '\n';
  std::cout << "classify: report written to "
            << (fs::path(cfg.out_dir) / "report.json").string() << "\n";
  return 0;
}

int run_all(PipelineConfig cfg) {
  const int synth_rc = run_synth(cfg);
  const int features_rc = run_features(cfg);
  const int classify_rc = run_classify(cfg);
  return std::max({synth_rc, features_rc, classify_rc});
}

}  // namespace riccimorph
