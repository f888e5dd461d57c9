#include <cmath>
#include <stdexcept>
#include <vector>

#include "abbrev/ml.hpp"
#include "abbrev/rng.hpp"
#include "ml_grow.hpp"

namespace abbrev::ml {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

SvmModel train_linear_svm(const Matrix& x, const Labels& y, const TrainConfig& cfg) {
  return train_linear_svm(x, y, {}, cfg);
}

SvmModel train_linear_svm(const Matrix& x, const Labels& y,
                          const std::vector<double>& sample_weights,
                          const TrainConfig& cfg) {
  const int n_features = detail::check_training_data(x, y, sample_weights);
  detail::check_both_classes(y);
  if (cfg.svm_epochs <= 0) throw std::invalid_argument("svm needs at least one epoch");
  if (cfg.svm_regularization <= 0.0) {
    throw std::invalid_argument("svm regularization must be positive");
  }
  const int n = static_cast<int>(x.size());
  std::vector<double> weights = sample_weights;
  if (weights.empty()) weights.assign(x.size(), 1.0);

  SvmModel model;
  model.means.assign(n_features, 0.0);
  model.scales.assign(n_features, 1.0);
  for (const auto& row : x) {
    for (int f = 0; f < n_features; ++f) model.means[f] += row[f];
  }
  for (double& m : model.means) m /= static_cast<double>(n);
  std::vector<double> var(n_features, 0.0);
  for (const auto& row : x) {
    for (int f = 0; f < n_features; ++f) {
      const double d = row[f] - model.means[f];
      var[f] += d * d;
    }
  }
  for (int f = 0; f < n_features; ++f) {
    const double sd = std::sqrt(var[f] / static_cast<double>(n));
    model.scales[f] = sd > 1e-12 ? sd : 1.0;
  }

  // Standardized copy of the data; the model keeps means/scales so raw
  // feature vectors can be scored later.
  Matrix z(n, std::vector<double>(n_features));
  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < n_features; ++f) {
      z[i][f] = (x[i][f] - model.means[f]) / model.scales[f];
    }
  }

  model.weights.assign(n_features, 0.0);
  model.bias = 0.0;
  const double lambda = cfg.svm_regularization;
  Rng rng(cfg.seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;

  std::uint64_t step = 0;
  for (int epoch = 0; epoch < cfg.svm_epochs; ++epoch) {
    rng.shuffle(order);
    for (int i : order) {
      ++step;
      const double eta = 1.0 / (lambda * static_cast<double>(step));
      const double y_pm = y[i] == 1 ? 1.0 : -1.0;
      double margin = model.bias;
      for (int f = 0; f < n_features; ++f) margin += model.weights[f] * z[i][f];
      const double shrink = 1.0 - eta * lambda;
      for (double& w : model.weights) w *= shrink;
      if (y_pm * margin < 1.0) {
        const double scale = eta * y_pm * weights[i];
        for (int f = 0; f < n_features; ++f) model.weights[f] += scale * z[i][f];
        model.bias += scale;
      }
    }
  }

  std::vector<double> importance(n_features, 0.0);
  for (int f = 0; f < n_features; ++f) importance[f] = std::abs(model.weights[f]);
  model.feature_importance = normalize_importance(std::move(importance));
  return model;
}

double predict_score(const SvmModel& m, const std::vector<double>& x) {
  if (x.size() != m.weights.size()) {
    throw std::invalid_argument("feature vector dimension does not match the model");
  }
  double margin = m.bias;
  for (std::size_t f = 0; f < m.weights.size(); ++f) {
    margin += m.weights[f] * (x[f] - m.means[f]) / m.scales[f];
  }
  return sigmoid(margin);
}

}  // namespace abbrev::ml
