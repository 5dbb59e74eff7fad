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

#include "riccimorph/ml.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riccimorph/errors.hpp"
#include "riccimorph/parallel.hpp"

namespace riccimorph {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void check_dims(const Dataset& data, int dims, const char* who) {
  for (const auto& row : data.x)
    if (static_cast<int>(row.size()) != dims)
      throw ConfigError(std::string(who) + ": feature dimension mismatch");
}

}  // namespace

double LogRegModel::score(const std::vector<double>& x) const {
  if (x.size() != w.size())
    throw ConfigError("logreg: feature dimension mismatch");
  return sigmoid(dot(w, x) + b);
}

int LogRegModel::predict(const std::vector<double>& x) const {
  return score(x) >= 0.5 ? kLabelAd : kLabelCn;
}

// Neighbors ordered by distance, AD before CN on exact ties, then by
// training index.
std::vector<int> KnnModel::neighbors(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != train.dims())
    throw ConfigError("knn: feature dimension mismatch");
  std::vector<std::pair<double, int>> order(train.size());
  for (int i = 0; i < train.size(); ++i) {
    double d2 = 0;
    for (size_t j = 0; j < x.size(); ++j) {
      const double d = x[j] - train.x[i][j];
      d2 += d * d;
    }
    order[i] = {d2, i};
  }
  std::sort(order.begin(), order.end(), [this](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    const int la = train.y[a.second], lb = train.y[b.second];
    if (la != lb) return la == kLabelAd;
    return a.second < b.second;
  });
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = order[i].second;
  return idx;
}

double KnnModel::score(const std::vector<double>& x) const {
  const auto idx = neighbors(x);
  int ad = 0;
  for (int i : idx) ad += train.y[i] == kLabelAd ? 1 : 0;
  return double(ad) / double(k);
}

int KnnModel::predict(const std::vector<double>& x) const {
  const auto idx = neighbors(x);
  int ad = 0;
  double ad_dist = 0, cn_dist = 0;
  for (int i : idx) {
    double d2 = 0;
    for (size_t j = 0; j < x.size(); ++j) {
      const double d = x[j] - train.x[i][j];
      d2 += d * d;
    }
    if (train.y[i] == kLabelAd) {
      ++ad;
      ad_dist += std::sqrt(d2);
    } else {
      cn_dist += std::sqrt(d2);
    }
  }
  const int cn = k - ad;
  if (ad != cn) return ad > cn ? kLabelAd : kLabelCn;
  if (ad_dist != cn_dist) return ad_dist < cn_dist ? kLabelAd : kLabelCn;
  return kLabelAd;
}

double MlpModel::score(const std::vector<double>& x) const {
  if (w1.empty() || x.size() != w1[0].size())
    throw ConfigError("mlp: feature dimension mismatch");
  double z = b2;
  for (int h = 0; h < hidden; ++h) {
    const double a = dot(w1[h], x) + b1[h];
    if (a > 0) z += w2[h] * a;
  }
  return sigmoid(z);
}

int MlpModel::predict(const std::vector<double>& x) const {
  return score(x) >= 0.5 ? kLabelAd : kLabelCn;
}

std::mt19937_64 substream(uint64_t root, uint64_t tag, uint64_t a,
                          uint64_t b) {
  std::seed_seq seq{uint32_t(root), uint32_t(root >> 32), uint32_t(tag),
                    uint32_t(a), uint32_t(a >> 32), uint32_t(b)};
  return std::mt19937_64(seq);
}

void Standardizer::fit(const Dataset& train) {
  if (train.size() == 0) throw ConfigError("cannot standardize empty data");
  const int d = train.dims();
  mean.assign(d, 0.0);
  stddev.assign(d, 0.0);
  for (const auto& row : train.x)
    for (int j = 0; j < d; ++j) mean[j] += row[j];
  for (int j = 0; j < d; ++j) mean[j] /= train.size();
  for (const auto& row : train.x)
    for (int j = 0; j < d; ++j) {
      const double c = row[j] - mean[j];
      stddev[j] += c * c;
    }
  for (int j = 0; j < d; ++j) {
    stddev[j] = std::sqrt(stddev[j] / train.size());
    if (stddev[j] == 0) stddev[j] = 1;  // constant column passes through
  }
}

Dataset Standardizer::apply(const Dataset& data) const {
  check_dims(data, static_cast<int>(mean.size()), "standardizer");
  Dataset out = data;
  for (auto& row : out.x)
    for (size_t j = 0; j < row.size(); ++j)
      row[j] = (row[j] - mean[j]) / stddev[j];
  return out;
}

std::unique_ptr<Classifier> train_logreg(const Dataset& train,
                                         const LogRegOptions& opts) {
  if (train.size() == 0) throw ConfigError("logreg: empty training set");
  const int n = train.size(), d = train.dims();
  check_dims(train, d, "logreg");
  auto model = std::make_unique<LogRegModel>();
  model->w.assign(d, 0.0);
  for (int epoch = 0; epoch < opts.epochs; ++epoch) {
    std::vector<double> grad_w(d, 0.0);
    double grad_b = 0;
    for (int i = 0; i < n; ++i) {
      const double err =
          double(train.y[i]) - sigmoid(dot(model->w, train.x[i]) + model->b);
      for (int j = 0; j < d; ++j) grad_w[j] += err * train.x[i][j];
      grad_b += err;
    }
    for (int j = 0; j < d; ++j) {
      model->w[j] += opts.lr * (grad_w[j] / n - opts.l2 * model->w[j]);
      if (!std::isfinite(model->w[j]))
        throw TrainError("logreg diverged at epoch " + std::to_string(epoch));
    }
    model->b += opts.lr * grad_b / n;
  }
  return model;
}

std::unique_ptr<Classifier> train_knn(const Dataset& train, int k) {
  if (k < 1 || k % 2 == 0)
    throw ConfigError("knn: k must be odd and positive, got " +
                      std::to_string(k));
  if (k > train.size())
    throw ConfigError("knn: k exceeds training size");
  check_dims(train, train.dims(), "knn");
  auto model = std::make_unique<KnnModel>();
  model->train = train;
  model->k = k;
  return model;
}

std::unique_ptr<Classifier> train_mlp(const Dataset& train,
                                      const MlpOptions& opts) {
  if (opts.hidden < 1)
    throw ConfigError("mlp: hidden layer must have at least one unit");
  if (train.size() == 0) throw ConfigError("mlp: empty training set");
  const int n = train.size(), d = train.dims(), nh = opts.hidden;
  check_dims(train, d, "mlp");

  auto model = std::make_unique<MlpModel>();
  model->hidden = nh;
  std::mt19937_64 rng(opts.seed);
  const double s1 = 1.0 / std::sqrt(double(d));
  const double s2 = 1.0 / std::sqrt(double(nh));
  std::uniform_real_distribution<double> u1(-s1, s1), u2(-s2, s2);
  model->w1.assign(nh, std::vector<double>(d));
  model->b1.assign(nh, 0.0);
  model->w2.assign(nh, 0.0);
  for (auto& row : model->w1)
    for (double& w : row) w = u1(rng);
  for (double& w : model->w2) w = u2(rng);

  std::vector<double> act(nh), grad_w2(nh), grad_b1(nh);
  std::vector<std::vector<double>> grad_w1(nh, std::vector<double>(d));
  for (int epoch = 0; epoch < opts.epochs; ++epoch) {
    for (auto& row : grad_w1) std::fill(row.begin(), row.end(), 0.0);
    std::fill(grad_w2.begin(), grad_w2.end(), 0.0);
    std::fill(grad_b1.begin(), grad_b1.end(), 0.0);
    double grad_b2 = 0, loss = 0;
    for (int i = 0; i < n; ++i) {
      const auto& x = train.x[i];
      double z = model->b2;
      for (int h = 0; h < nh; ++h) {
        const double a = dot(model->w1[h], x) + model->b1[h];
        act[h] = a > 0 ? a : 0;
        z += model->w2[h] * act[h];
      }
      const double p = sigmoid(z);
      const double y = double(train.y[i]);
      loss -= y * std::log(std::max(p, 1e-300)) +
              (1 - y) * std::log(std::max(1 - p, 1e-300));
      const double dz = p - y;  // d(loss)/dz for cross-entropy + sigmoid
      grad_b2 += dz;
      for (int h = 0; h < nh; ++h) {
        grad_w2[h] += dz * act[h];
        if (act[h] > 0) {
          const double dh = dz * model->w2[h];
          grad_b1[h] += dh;
          for (int j = 0; j < d; ++j) grad_w1[h][j] += dh * x[j];
        }
      }
    }
    if (!std::isfinite(loss))
      throw TrainError("mlp diverged at epoch " + std::to_string(epoch));
    const double step = opts.lr / n;
    for (int h = 0; h < nh; ++h) {
      for (int j = 0; j < d; ++j) model->w1[h][j] -= step * grad_w1[h][j];
      model->b1[h] -= step * grad_b1[h];
      model->w2[h] -= step * grad_w2[h];
    }
    model->b2 -= step * grad_b2;
  }
  return model;
}

ConfusionMatrix evaluate(const Classifier& model, const Dataset& test) {
  ConfusionMatrix cm;
  for (int i = 0; i < test.size(); ++i) {
    const int predicted = model.predict(test.x[i]);
    if (test.y[i] == kLabelAd)
      predicted == kLabelAd ? ++cm.tp : ++cm.fn;
    else
      predicted == kLabelAd ? ++cm.fp : ++cm.tn;
  }
  return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw ConfigError("metrics of an empty matrix");
  Metrics m;
  m.accuracy = double(cm.tp + cm.tn) / cm.total();
  m.sensitivity = cm.tp + cm.fn > 0 ? double(cm.tp) / (cm.tp + cm.fn) : 0;
  m.specificity = cm.tn + cm.fp > 0 ? double(cm.tn) / (cm.tn + cm.fp) : 0;
  m.precision = cm.tp + cm.fp > 0 ? double(cm.tp) / (cm.tp + cm.fp) : 0;
  m.f1 = 2 * cm.tp + cm.fp + cm.fn > 0
             ? 2.0 * cm.tp / (2.0 * cm.tp + cm.fp + cm.fn)
             : 0;
  return m;
}

RocCurve roc_curve(const std::vector<double>& scores,
                   const std::vector<int>& labels) {
  if (scores.size() != labels.size() || scores.empty())
    throw StatsError("roc: scores and labels must match and be nonempty");
  int pos = 0, neg = 0;
  for (int y : labels) (y == kLabelAd ? pos : neg) += 1;
  if (pos == 0 || neg == 0)
    throw StatsError("roc: both classes must be present");
  for (double s : scores)
    if (!std::isfinite(s)) throw StatsError("roc: non-finite score");

  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });

  RocCurve roc;
  roc.points.push_back({0.0, 0.0});
  int tp = 0, fp = 0;
  size_t i = 0;
  while (i < order.size()) {
    const double threshold = scores[order[i]];
    while (i < order.size() && scores[order[i]] == threshold) {
      (labels[order[i]] == kLabelAd ? tp : fp) += 1;
      ++i;
    }
    roc.points.push_back({double(fp) / neg, double(tp) / pos});
  }
  for (size_t j = 1; j < roc.points.size(); ++j) {
    const auto& a = roc.points[j - 1];
    const auto& b = roc.points[j];
    roc.auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2;
  }
  return roc;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  // continued fraction (modified Lentz), with the symmetry transform for
  // fast convergence
  const auto contfrac = [](double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-15;
    double c = 1, d = 1 - (a + b) * x / (a + 1);
    if (std::abs(d) < tiny) d = tiny;
    d = 1 / d;
    double f = d;
    for (int m = 1; m <= 500; ++m) {
      const double m2 = 2.0 * m;
      double num = m * (b - m) * x / ((a + m2 - 1) * (a + m2));
      d = 1 + num * d;
      if (std::abs(d) < tiny) d = tiny;
      c = 1 + num / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1 / d;
      f *= d * c;
      num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1));
      d = 1 + num * d;
      if (std::abs(d) < tiny) d = tiny;
      c = 1 + num / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1 / d;
      const double delta = d * c;
      f *= delta;
      if (std::abs(delta - 1) < eps) break;
    }
    return f;
  };
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  if (x < (a + 1) / (a + b + 2))
    return std::exp(ln_front) * contfrac(a, b, x) / a;
  return 1 - std::exp(ln_front) * contfrac(b, a, 1 - x) / b;
}

WelchResult welch_t_test(const std::vector<double>& a,
                         const std::vector<double>& b) {
  const size_t na = a.size(), nb = b.size();
  if (na < 2 || nb < 2)
    throw StatsError("welch: each sample needs at least two values");
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / na;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / nb;
  double va = 0, vb = 0;
  for (double x : a) va += (x - ma) * (x - ma);
  for (double x : b) vb += (x - mb) * (x - mb);
  va /= na - 1;
  vb /= nb - 1;
  if (va == 0 && vb == 0)
    throw StatsError("welch: both samples have zero variance");
  const double se_a = va / na, se_b = vb / nb;
  WelchResult r;
  r.t = (ma - mb) / std::sqrt(se_a + se_b);
  r.dof = (se_a + se_b) * (se_a + se_b) /
          (se_a * se_a / (na - 1) + se_b * se_b / (nb - 1));
  // two-sided p through the t-distribution tail identity
  r.p = regularized_incomplete_beta(r.dof / 2, 0.5,
                                    r.dof / (r.dof + r.t * r.t));
  return r;
}

ClassifierSpec classifier_spec_from_name(const std::string& name) {
  ClassifierSpec spec;
  spec.name = name;
  if (name == "lr") {
    spec.kind = ClassifierKind::kLogReg;
  } else if (name == "knn") {
    spec.kind = ClassifierKind::kKnn;
  } else if (name == "mlp") {
    spec.kind = ClassifierKind::kMlp;
  } else {
    throw ConfigError("unknown classifier '" + name +
                      "' (expected lr, knn, or mlp)");
  }
  return spec;
}

EvalReport repeated_splits_with_builder(
    int n_subjects, const std::vector<int>& labels, const SplitOptions& opts,
    const std::vector<ClassifierSpec>& specs, const DatasetBuilder& builder) {
  if (opts.repeats < 1) throw ConfigError("repeats must be at least 1");
  if (specs.empty()) throw ConfigError("no classifiers configured");
  std::vector<int> ad_idx, cn_idx;
  for (int i = 0; i < n_subjects; ++i)
    (labels[i] == kLabelAd ? ad_idx : cn_idx).push_back(i);
  if (ad_idx.empty() || cn_idx.empty())
    throw ConfigError("both classes must be present");
  const auto train_count = [&](size_t n) {
    const int k = static_cast<int>(std::llround(opts.train_frac * double(n)));
    if (k < 1 || k >= static_cast<int>(n))
      throw ConfigError("train fraction " + std::to_string(opts.train_frac) +
                        " leaves an empty split for a class of " +
                        std::to_string(n));
    return k;
  };
  const int ad_train = train_count(ad_idx.size());
  const int cn_train = train_count(cn_idx.size());

  // per-split results, filled in parallel, aggregated in fixed order
  std::vector<std::vector<SplitResult>> results(
      opts.repeats, std::vector<SplitResult>(specs.size()));

  parallel_for(opts.repeats, opts.workers, [&](int split) {
    auto rng = substream(opts.seed, /*tag=*/2, uint64_t(split));
    std::vector<int> ad = ad_idx, cn = cn_idx;
    std::shuffle(ad.begin(), ad.end(), rng);
    std::shuffle(cn.begin(), cn.end(), rng);
    std::vector<int> train_idx(ad.begin(), ad.begin() + ad_train);
    train_idx.insert(train_idx.end(), cn.begin(), cn.begin() + cn_train);
    std::vector<int> test_idx(ad.begin() + ad_train, ad.end());
    test_idx.insert(test_idx.end(), cn.begin() + cn_train, cn.end());
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());

    auto [train_raw, test_raw] = builder(train_idx, test_idx);
    Standardizer std_params;
    std_params.fit(train_raw);
    const Dataset train = std_params.apply(train_raw);
    const Dataset test = std_params.apply(test_raw);

    for (size_t c = 0; c < specs.size(); ++c) {
      const ClassifierSpec& spec = specs[c];
      std::unique_ptr<Classifier> model;
      switch (spec.kind) {
        case ClassifierKind::kLogReg:
          model = train_logreg(train, spec.logreg);
          break;
        case ClassifierKind::kKnn:
          model = train_knn(train, std::min(spec.knn_k,
                                            train.size() % 2 == 0
                                                ? train.size() - 1
                                                : train.size()));
          break;
        case ClassifierKind::kMlp: {
          MlpOptions mlp = spec.mlp;
          mlp.seed = substream(opts.seed, /*tag=*/3, uint64_t(split),
                               uint64_t(c))();
          model = train_mlp(train, mlp);
          break;
        }
      }
      SplitResult& r = results[split][c];
      r.cm = evaluate(*model, test);
      r.m = metrics(r.cm);
      r.test_labels = test.y;
      r.test_scores.resize(test.size());
      for (int i = 0; i < test.size(); ++i)
        r.test_scores[i] = model->score(test.x[i]);
    }
  });

  EvalReport report;
  report.classifiers.resize(specs.size());
  for (size_t c = 0; c < specs.size(); ++c) {
    ClassifierReport& cr = report.classifiers[c];
    cr.name = specs[c].name;
    cr.per_split.reserve(opts.repeats);
    for (int s = 0; s < opts.repeats; ++s)
      cr.per_split.push_back(results[s][c]);
    for (const SplitResult& r : cr.per_split)
      cr.accuracy_samples.push_back(r.m.accuracy);

    const auto aggregate = [&](auto pick, double& mean_out, double& std_out) {
      double mean = 0;
      for (const SplitResult& r : cr.per_split) mean += pick(r.m);
      mean /= cr.per_split.size();
      double var = 0;
      for (const SplitResult& r : cr.per_split) {
        const double d = pick(r.m) - mean;
        var += d * d;
      }
      std_out = cr.per_split.size() > 1
                    ? std::sqrt(var / (cr.per_split.size() - 1))
                    : 0;
      mean_out = mean;
    };
    aggregate([](const Metrics& m) { return m.accuracy; }, cr.mean.accuracy,
              cr.stddev.accuracy);
    aggregate([](const Metrics& m) { return m.sensitivity; },
              cr.mean.sensitivity, cr.stddev.sensitivity);
    aggregate([](const Metrics& m) { return m.specificity; },
              cr.mean.specificity, cr.stddev.specificity);
    aggregate([](const Metrics& m) { return m.precision; }, cr.mean.precision,
              cr.stddev.precision);
    aggregate([](const Metrics& m) { return m.f1; }, cr.mean.f1,
              cr.stddev.f1);

    // ROC at the classifier's best split (first on ties)
    int best = 0;
    for (int s = 1; s < opts.repeats; ++s)
      if (cr.per_split[s].m.accuracy > cr.per_split[best].m.accuracy)
        best = s;
    cr.roc_split = best;
    cr.roc = roc_curve(cr.per_split[best].test_scores,
                       cr.per_split[best].test_labels);
  }
  return report;
}

EvalReport repeated_splits(const Dataset& data, const SplitOptions& opts,
                           const std::vector<ClassifierSpec>& specs) {
  const DatasetBuilder select = [&data](const std::vector<int>& train_idx,
                                        const std::vector<int>& test_idx) {
    Dataset train, test;
    for (int i : train_idx) {
      train.x.push_back(data.x[i]);
      train.y.push_back(data.y[i]);
    }
    for (int i : test_idx) {
      test.x.push_back(data.x[i]);
      test.y.push_back(data.y[i]);
    }
    return std::make_pair(train, test);
  };
  return repeated_splits_with_builder(data.size(), data.y, opts, specs,
                                      select);
}

}  // namespace riccimorph
