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
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace riccimorph {

// Binary labels: AD is the positive class.
inline constexpr int kLabelAd = 1;
inline constexpr int kLabelCn = 0;

struct Dataset {
  std::vector<std::vector<double>> x;
  std::vector<int> y;  // 1 = AD, 0 = CN
  int dims() const { return x.empty() ? 0 : static_cast<int>(x[0].size()); }
  int size() const { return static_cast<int>(x.size()); }
};

/// Per-column standardization fitted on a training split.
struct Standardizer {
  std::vector<double> mean, stddev;
  void fit(const Dataset& train);
  Dataset apply(const Dataset& data) const;
};

/// A trained binary classifier. score is a real-valued ranking (a
/// probability for the parametric models, the AD vote fraction for kNN);
/// predict thresholds it.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual double score(const std::vector<double>& x) const = 0;
  virtual int predict(const std::vector<double>& x) const = 0;
};

class LogRegModel final : public Classifier {
 public:
  std::vector<double> w;
  double b = 0;
  double score(const std::vector<double>& x) const override;
  int predict(const std::vector<double>& x) const override;
};

class KnnModel final : public Classifier {
 public:
  Dataset train;
  int k = 1;
  double score(const std::vector<double>& x) const override;
  int predict(const std::vector<double>& x) const override;
  std::vector<int> neighbors(const std::vector<double>& x) const;
};

class MlpModel final : public Classifier {
 public:
  int hidden = 0;
  std::vector<std::vector<double>> w1;  // hidden x dims
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0;
  double score(const std::vector<double>& x) const override;
  int predict(const std::vector<double>& x) const override;
};

struct LogRegOptions {
  double lr = 0.1;
  int epochs = 2000;
  double l2 = 1e-4;
};
/// L2-regularized logistic regression by full-batch gradient ascent from a
/// zero initialization (deterministic). Throws TrainError on divergence.
std::unique_ptr<Classifier> train_logreg(const Dataset& train,
                                         const LogRegOptions& opts = {});

/// k-nearest-neighbor majority vote, Euclidean metric. k must be odd
/// (ties are ill-defined for binary otherwise) and at most the training
/// size. Equal distances order AD before CN; a tied vote falls back to the
/// smaller summed distance, then to AD.
std::unique_ptr<Classifier> train_knn(const Dataset& train, int k);

struct MlpOptions {
  int hidden = 16;
  double lr = 0.01;
  int epochs = 3000;
  uint64_t seed = 0;
};
/// One hidden layer of rectified units with a sigmoid output, trained by
/// full-batch gradient descent on the cross-entropy loss. Deterministic
/// for a fixed seed.
std::unique_ptr<Classifier> train_mlp(const Dataset& train,
                                      const MlpOptions& opts = {});

struct ConfusionMatrix {
  int tp = 0, tn = 0, fp = 0, fn = 0;
  int total() const { return tp + tn + fp + fn; }
};

ConfusionMatrix evaluate(const Classifier& model, const Dataset& test);

/// Accuracy, sensitivity, specificity, precision, F1. Zero-denominator
/// cases return 0 so reports stay total.
struct Metrics {
  double accuracy = 0, sensitivity = 0, specificity = 0, precision = 0,
         f1 = 0;
};
Metrics metrics(const ConfusionMatrix& cm);

struct RocPoint {
  double fpr, tpr;
};
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0;
};
/// Threshold sweep over the unique scores; AUC by the trapezoid rule.
/// Throws StatsError unless both classes are present.
RocCurve roc_curve(const std::vector<double>& scores,
                   const std::vector<int>& labels);

struct WelchResult {
  double t = 0;
  double dof = 0;
  double p = 1;
};
/// Welch's two-sample t-test (unequal variances), two-sided p-value via
/// the regularized incomplete beta function. Requires two or more samples
/// per side and at least one nonzero variance.
WelchResult welch_t_test(const std::vector<double>& a,
                         const std::vector<double>& b);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// ---------------------------------------------------------------------
// Repeated stratified holdout protocol

enum class ClassifierKind { kLogReg, kKnn, kMlp };

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::kLogReg;
  std::string name = "lr";
  LogRegOptions logreg;
  int knn_k = 5;
  MlpOptions mlp;
};
ClassifierSpec classifier_spec_from_name(const std::string& name);

struct SplitOptions {
  double train_frac = 0.8;
  int repeats = 20;
  uint64_t seed = 0;
  int workers = 0;  // 0 = hardware concurrency
};

struct SplitResult {
  ConfusionMatrix cm;
  Metrics m;
  std::vector<double> test_scores;  // for ROC
  std::vector<int> test_labels;
};

struct ClassifierReport {
  std::string name;
  std::vector<SplitResult> per_split;
  Metrics mean, stddev;
  std::vector<double> accuracy_samples;
  RocCurve roc;        // from the first best-accuracy split
  int roc_split = -1;
};

struct EvalReport {
  std::vector<ClassifierReport> classifiers;
};

/// Builds (train, test) datasets for given subject index splits; features
/// are returned raw and standardized inside the protocol.
using DatasetBuilder = std::function<std::pair<Dataset, Dataset>(
    const std::vector<int>& train_idx, const std::vector<int>& test_idx)>;

/// Repeated stratified holdout over n subjects with the given labels.
/// Each repeat draws its own substream from the root seed, fits
/// standardization on the training split only, then trains and evaluates
/// every classifier. Deterministic for a fixed seed, independent of the
/// worker count.
EvalReport repeated_splits_with_builder(int n_subjects,
                                        const std::vector<int>& labels,
                                        const SplitOptions& opts,
                                        const std::vector<ClassifierSpec>& specs,
                                        const DatasetBuilder& builder);

/// Same protocol over a fixed feature matrix.
EvalReport repeated_splits(const Dataset& data, const SplitOptions& opts,
                           const std::vector<ClassifierSpec>& specs);

/// Deterministic RNG substream: a generator seeded from (root, tags...).
std::mt19937_64 substream(uint64_t root, uint64_t tag, uint64_t a = 0,
                          uint64_t b = 0);

}  // namespace riccimorph
