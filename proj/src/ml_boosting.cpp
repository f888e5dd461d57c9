#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "abbrev/logging.hpp"
#include "abbrev/ml.hpp"
#include "ml_grow.hpp"

namespace abbrev::ml {

namespace {

constexpr double kEps = 1e-12;
constexpr double kProbClamp = 1e-6;

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

int default_stage_depth(const TrainConfig& cfg) {
  return cfg.max_depth > 0 ? cfg.max_depth : 3;
}

BoostingModel train_gradient(const Matrix& x, const std::vector<double>& targets,
                             const std::vector<double>& weights, int n_features,
                             const TrainConfig& cfg) {
  const int n = static_cast<int>(x.size());
  double wsum = 0.0, wpos = 0.0;
  for (int i = 0; i < n; ++i) {
    wsum += weights[i];
    wpos += weights[i] * targets[i];
  }
  const double p0 = std::clamp(wpos / wsum, kProbClamp, 1.0 - kProbClamp);

  BoostingModel model;
  model.base_score = std::log(p0 / (1.0 - p0));
  model.learning_rate = cfg.learning_rate;
  model.n_features = n_features;
  model.adaboost = false;

  detail::GrowSpec spec;
  spec.max_depth = default_stage_depth(cfg);
  spec.min_samples_split = cfg.min_samples_split;
  spec.min_samples_leaf = cfg.min_samples_leaf;
  spec.allowed.resize(n_features);
  for (int f = 0; f < n_features; ++f) spec.allowed[f] = f;

  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  std::vector<double> margin(n, model.base_score);
  std::vector<double> residual(n, 0.0);
  std::vector<double> importance(n_features, 0.0);

  for (int round = 0; round < cfg.boosting_rounds; ++round) {
    for (int i = 0; i < n; ++i) residual[i] = targets[i] - sigmoid(margin[i]);
    Tree stage = detail::grow_tree(x, residual, weights, rows, spec, &importance);
    for (int i = 0; i < n; ++i) {
      margin[i] += cfg.learning_rate * tree_predict(stage, x[i]);
    }
    model.stages.push_back(std::move(stage));
    model.stage_weights.push_back(cfg.learning_rate);
  }
  model.feature_importance = normalize_importance(std::move(importance));
  return model;
}

BoostingModel train_adaboost(const Matrix& x, const std::vector<double>& targets,
                             const std::vector<double>& base_weights, int n_features,
                             const TrainConfig& cfg) {
  const int n = static_cast<int>(x.size());

  BoostingModel model;
  model.base_score = 0.0;
  model.learning_rate = cfg.learning_rate;
  model.n_features = n_features;
  model.adaboost = true;

  detail::GrowSpec spec;
  spec.max_depth = default_stage_depth(cfg);
  spec.min_samples_split = cfg.min_samples_split;
  spec.min_samples_leaf = cfg.min_samples_leaf;
  spec.allowed.resize(n_features);
  for (int f = 0; f < n_features; ++f) spec.allowed[f] = f;

  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;

  // Start from the caller's weights so class weighting composes with the
  // reweighting schedule.
  std::vector<double> weights = base_weights;
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  for (double& w : weights) w /= wsum;

  std::vector<double> importance(n_features, 0.0);
  for (int round = 0; round < cfg.boosting_rounds; ++round) {
    Tree stage = detail::grow_tree(x, targets, weights, rows, spec, &importance);
    double err = 0.0;
    std::vector<int> predicted(n);
    for (int i = 0; i < n; ++i) {
      predicted[i] = tree_predict(stage, x[i]) >= 0.5 ? 1 : 0;
      if (predicted[i] != static_cast<int>(targets[i])) err += weights[i];
    }
    if (err >= 0.5) {
      log::warn("boosting stopped at round " + std::to_string(round) +
                ": weighted error reached 0.5");
      break;
    }
    err = std::max(err, kEps);
    const double alpha = 0.5 * std::log((1.0 - err) / err);
    model.stages.push_back(std::move(stage));
    model.stage_weights.push_back(alpha);
    if (err <= kEps) break;  // perfect stage; further rounds cannot improve

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double y_pm = targets[i] > 0.5 ? 1.0 : -1.0;
      const double h_pm = predicted[i] == 1 ? 1.0 : -1.0;
      weights[i] *= std::exp(-alpha * y_pm * h_pm);
      total += weights[i];
    }
    for (double& w : weights) w /= total;
  }
  model.feature_importance = normalize_importance(std::move(importance));
  return model;
}

}  // namespace

BoostingModel train_gradient_boosting(const Matrix& x, const Labels& y,
                                      const TrainConfig& cfg) {
  return train_gradient_boosting(x, y, {}, cfg);
}

BoostingModel train_gradient_boosting(const Matrix& x, const Labels& y,
                                      const std::vector<double>& sample_weights,
                                      const TrainConfig& cfg) {
  const int n_features = detail::check_training_data(x, y, sample_weights);
  detail::check_both_classes(y);
  if (cfg.boosting_rounds < 0) throw std::invalid_argument("boosting rounds must be >= 0");
  std::vector<double> targets(y.begin(), y.end());
  std::vector<double> weights = sample_weights;
  if (weights.empty()) weights.assign(x.size(), 1.0);
  if (cfg.adaboost) return train_adaboost(x, targets, weights, n_features, cfg);
  return train_gradient(x, targets, weights, n_features, cfg);
}

double predict_score(const BoostingModel& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.n_features) {
    throw std::invalid_argument("feature vector dimension does not match the model");
  }
  double margin = m.base_score;
  if (m.adaboost) {
    for (std::size_t t = 0; t < m.stages.size(); ++t) {
      const double vote = tree_predict(m.stages[t], x) >= 0.5 ? 1.0 : -1.0;
      margin += m.stage_weights[t] * vote;
    }
  } else {
    for (std::size_t t = 0; t < m.stages.size(); ++t) {
      margin += m.stage_weights[t] * tree_predict(m.stages[t], x);
    }
  }
  return sigmoid(margin);
}

}  // namespace abbrev::ml
