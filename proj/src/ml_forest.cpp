#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "abbrev/ml.hpp"
#include "abbrev/rng.hpp"
#include "ml_grow.hpp"

namespace abbrev::ml {

ForestModel train_random_forest(const Matrix& x, const Labels& y, const TrainConfig& cfg) {
  return train_random_forest(x, y, {}, cfg);
}

ForestModel train_random_forest(const Matrix& x, const Labels& y,
                                const std::vector<double>& sample_weights,
                                const TrainConfig& cfg) {
  const int n_features = detail::check_training_data(x, y, sample_weights);
  detail::check_both_classes(y);
  if (cfg.n_trees <= 0) throw std::invalid_argument("forest needs at least one tree");
  const int n = static_cast<int>(x.size());
  std::vector<double> targets(y.begin(), y.end());
  std::vector<double> weights = sample_weights;
  if (weights.empty()) weights.assign(x.size(), 1.0);

  const int subset = std::max(1, static_cast<int>(std::floor(std::sqrt(
                                     static_cast<double>(n_features)))));

  ForestModel model;
  model.n_features = n_features;
  model.per_split = cfg.per_split_features;
  model.trees.reserve(cfg.n_trees);
  model.per_tree_features.reserve(cfg.n_trees);
  std::vector<double> importance(n_features, 0.0);

  Rng master(cfg.seed);
  std::vector<int> all_features(n_features);
  for (int f = 0; f < n_features; ++f) all_features[f] = f;

  for (int k = 0; k < cfg.n_trees; ++k) {
    Rng tree_rng = master.stream(static_cast<std::uint64_t>(k));
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) {
      rows[i] = static_cast<int>(tree_rng.below(static_cast<std::uint64_t>(n)));
    }

    detail::GrowSpec spec;
    spec.max_depth = std::max(0, cfg.max_depth);
    spec.min_samples_split = cfg.min_samples_split;
    spec.min_samples_leaf = cfg.min_samples_leaf;
    std::vector<int> tree_features;
    if (cfg.per_split_features) {
      spec.allowed = all_features;
      spec.per_split = true;
      spec.per_split_count = subset;
      spec.rng = &tree_rng;
    } else {
      for (std::size_t pick :
           tree_rng.sample_indices(static_cast<std::size_t>(n_features),
                                   static_cast<std::size_t>(subset))) {
        tree_features.push_back(static_cast<int>(pick));
      }
      spec.allowed = tree_features;
    }

    model.trees.push_back(detail::grow_tree(x, targets, weights, rows, spec, &importance));
    model.per_tree_features.push_back(std::move(tree_features));
  }

  model.feature_importance = normalize_importance(std::move(importance));
  return model;
}

namespace {

void check_dim(const ForestModel& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.n_features) {
    throw std::invalid_argument("feature vector dimension does not match the model");
  }
}

}  // namespace

double predict_score(const ForestModel& m, const std::vector<double>& x) {
  check_dim(m, x);
  if (m.trees.empty()) return 0.0;
  double total = 0.0;
  for (const Tree& tree : m.trees) total += tree_predict(tree, x);
  return total / static_cast<double>(m.trees.size());
}

double forest_vote_fraction(const ForestModel& m, const std::vector<double>& x) {
  check_dim(m, x);
  if (m.trees.empty()) return 0.0;
  int votes = 0;
  for (const Tree& tree : m.trees) {
    if (tree_predict(tree, x) >= 0.5) ++votes;
  }
  return static_cast<double>(votes) / static_cast<double>(m.trees.size());
}

}  // namespace abbrev::ml
