#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace abbrev::ml {

// Training data: one row of features per sample plus a 0/1 label.
using Matrix = std::vector<std::vector<double>>;
using Labels = std::vector<int>;

// Shared knobs for every trainer.  A field is only consulted by the trainers
// that need it; the rest ignore it.  max_depth <= 0 means "model default"
// (unlimited for single trees and forests, 3 for boosting stages).
struct TrainConfig {
  std::uint64_t seed = 0;
  int n_trees = 100;
  int max_depth = 0;
  int min_samples_split = 2;
  int min_samples_leaf = 1;
  int boosting_rounds = 100;
  double learning_rate = 0.1;
  int svm_epochs = 200;
  double svm_regularization = 0.01;
  bool per_split_features = false;
  bool adaboost = false;
};

// Flat binary tree.  Node 0 is the root; feature == -1 marks a leaf whose
// prediction is `value` (positive-class fraction for classification trees,
// mean target for regression trees).  Inner nodes route x[feature] <=
// threshold to `left`, otherwise to `right`.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  double value = 0.0;
  int left = -1;
  int right = -1;
};

struct Tree {
  std::vector<TreeNode> nodes;
};

struct TreeModel {
  Tree tree;
  int n_features = 0;
  std::vector<double> feature_importance;
};

struct ForestModel {
  std::vector<Tree> trees;
  // One entry per tree listing the global feature ids that tree was allowed
  // to split on.  Empty inner lists mean "all features" (per-split mode).
  std::vector<std::vector<int>> per_tree_features;
  int n_features = 0;
  bool per_split = false;
  std::vector<double> feature_importance;
};

struct BoostingModel {
  double base_score = 0.0;
  double learning_rate = 0.1;
  std::vector<Tree> stages;
  std::vector<double> stage_weights;
  int n_features = 0;
  bool adaboost = false;
  std::vector<double> feature_importance;
};

struct SvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::vector<double> means;
  std::vector<double> scales;
  std::vector<double> feature_importance;
};

using Model = std::variant<TreeModel, ForestModel, BoostingModel, SvmModel>;

// --- training -------------------------------------------------------------

TreeModel train_decision_tree(const Matrix& x, const Labels& y, const TrainConfig& cfg);
TreeModel train_decision_tree(const Matrix& x, const Labels& y,
                              const std::vector<double>& sample_weights,
                              const TrainConfig& cfg);
ForestModel train_random_forest(const Matrix& x, const Labels& y, const TrainConfig& cfg);
ForestModel train_random_forest(const Matrix& x, const Labels& y,
                                const std::vector<double>& sample_weights,
                                const TrainConfig& cfg);
BoostingModel train_gradient_boosting(const Matrix& x, const Labels& y, const TrainConfig& cfg);
BoostingModel train_gradient_boosting(const Matrix& x, const Labels& y,
                                      const std::vector<double>& sample_weights,
                                      const TrainConfig& cfg);
SvmModel train_linear_svm(const Matrix& x, const Labels& y, const TrainConfig& cfg);
SvmModel train_linear_svm(const Matrix& x, const Labels& y,
                          const std::vector<double>& sample_weights,
                          const TrainConfig& cfg);

// --- prediction -----------------------------------------------------------

// Leaf value reached by x in a single tree.
double tree_predict(const Tree& tree, const std::vector<double>& x);

// Probability-like score in [0, 1] for the positive class.
double predict_score(const TreeModel& m, const std::vector<double>& x);
double predict_score(const ForestModel& m, const std::vector<double>& x);
double predict_score(const BoostingModel& m, const std::vector<double>& x);
double predict_score(const SvmModel& m, const std::vector<double>& x);
double predict_score(const Model& m, const std::vector<double>& x);

// Fraction of forest trees whose leaf votes positive (leaf value >= 0.5).
// Distinct from predict_score, which averages the leaf fractions themselves.
double forest_vote_fraction(const ForestModel& m, const std::vector<double>& x);

int predict_label(const Model& m, const std::vector<double>& x, double threshold = 0.5);

// --- introspection --------------------------------------------------------

// Scales a raw importance accumulator so it is non-negative and sums to 1.
// A degenerate accumulator (all zero, or non-finite) becomes uniform.
std::vector<double> normalize_importance(std::vector<double> raw);

const std::vector<double>& feature_importance(const Model& m);

// --- serialization --------------------------------------------------------

struct SavedModel {
  Model model;
  double threshold = 0.5;
};

// Versioned envelope shared by every model file: {"format_version": 1,
// "model_type": ..., "threshold": ..., "payload": {...}}.
nlohmann::json envelope(const std::string& model_type, double threshold,
                        nlohmann::json payload);

nlohmann::json model_to_json(const Model& m, double threshold);
SavedModel model_from_json(const nlohmann::json& j);

void save_model(const Model& m, double threshold, const std::string& path);
SavedModel load_model(const std::string& path);

nlohmann::json tree_to_json(const Tree& tree);
Tree tree_from_json(const nlohmann::json& j);

}  // namespace abbrev::ml
