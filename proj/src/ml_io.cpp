#include <fstream>
#include <stdexcept>
#include <variant>

#include "abbrev/ml.hpp"

namespace abbrev::ml {

namespace {

constexpr int kFormatVersion = 1;

nlohmann::json trees_to_json(const std::vector<Tree>& trees) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Tree& t : trees) arr.push_back(tree_to_json(t));
  return arr;
}

std::vector<Tree> trees_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::runtime_error("model payload: expected an array of trees");
  std::vector<Tree> trees;
  trees.reserve(arr.size());
  for (const auto& t : arr) trees.push_back(tree_from_json(t));
  return trees;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::runtime_error(std::string("model payload: missing field '") + key + "'");
  }
  return *it;
}

}  // namespace

nlohmann::json tree_to_json(const Tree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const TreeNode& n : tree.nodes) {
    nodes.push_back({{"feature", n.feature},
                     {"threshold", n.threshold},
                     {"value", n.value},
                     {"left", n.left},
                     {"right", n.right}});
  }
  return nodes;
}

Tree tree_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("model payload: expected a node array");
  Tree tree;
  tree.nodes.reserve(j.size());
  const int count = static_cast<int>(j.size());
  for (const auto& nj : j) {
    TreeNode n;
    n.feature = field(nj, "feature").get<int>();
    n.threshold = field(nj, "threshold").get<double>();
    n.value = field(nj, "value").get<double>();
    n.left = field(nj, "left").get<int>();
    n.right = field(nj, "right").get<int>();
    if (n.feature >= 0 && (n.left < 0 || n.left >= count || n.right < 0 || n.right >= count)) {
      throw std::runtime_error("model payload: tree node child out of range");
    }
    tree.nodes.push_back(n);
  }
  return tree;
}

nlohmann::json envelope(const std::string& model_type, double threshold,
                        nlohmann::json payload) {
  return {{"format_version", kFormatVersion},
          {"model_type", model_type},
          {"threshold", threshold},
          {"payload", std::move(payload)}};
}

nlohmann::json model_to_json(const Model& m, double threshold) {
  return std::visit(
      [&](const auto& model) -> nlohmann::json {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, TreeModel>) {
          return envelope("tree", threshold,
                          {{"n_features", model.n_features},
                           {"nodes", tree_to_json(model.tree)},
                           {"feature_importance", model.feature_importance}});
        } else if constexpr (std::is_same_v<T, ForestModel>) {
          return envelope("forest", threshold,
                          {{"n_features", model.n_features},
                           {"per_split", model.per_split},
                           {"per_tree_features", model.per_tree_features},
                           {"trees", trees_to_json(model.trees)},
                           {"feature_importance", model.feature_importance}});
        } else if constexpr (std::is_same_v<T, BoostingModel>) {
          return envelope("boosting", threshold,
                          {{"n_features", model.n_features},
                           {"base_score", model.base_score},
                           {"learning_rate", model.learning_rate},
                           {"adaboost", model.adaboost},
                           {"stage_weights", model.stage_weights},
                           {"stages", trees_to_json(model.stages)},
                           {"feature_importance", model.feature_importance}});
        } else {
          static_assert(std::is_same_v<T, SvmModel>);
          return envelope("svm", threshold,
                          {{"weights", model.weights},
                           {"bias", model.bias},
                           {"means", model.means},
                           {"scales", model.scales},
                           {"feature_importance", model.feature_importance}});
        }
      },
      m);
}

SavedModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("model file: expected a JSON object");
  const int version = field(j, "format_version").get<int>();
  if (version != kFormatVersion) {
    throw std::runtime_error("model file: unsupported format_version " +
                             std::to_string(version));
  }
  const std::string type = field(j, "model_type").get<std::string>();
  const nlohmann::json& payload = field(j, "payload");

  SavedModel out;
  out.threshold = field(j, "threshold").get<double>();
  if (type == "tree") {
    TreeModel m;
    m.n_features = field(payload, "n_features").get<int>();
    m.tree = tree_from_json(field(payload, "nodes"));
    m.feature_importance = field(payload, "feature_importance").get<std::vector<double>>();
    out.model = std::move(m);
  } else if (type == "forest") {
    ForestModel m;
    m.n_features = field(payload, "n_features").get<int>();
    m.per_split = field(payload, "per_split").get<bool>();
    m.per_tree_features =
        field(payload, "per_tree_features").get<std::vector<std::vector<int>>>();
    m.trees = trees_from_json(field(payload, "trees"));
    m.feature_importance = field(payload, "feature_importance").get<std::vector<double>>();
    out.model = std::move(m);
  } else if (type == "boosting") {
    BoostingModel m;
    m.n_features = field(payload, "n_features").get<int>();
    m.base_score = field(payload, "base_score").get<double>();
    m.learning_rate = field(payload, "learning_rate").get<double>();
    m.adaboost = field(payload, "adaboost").get<bool>();
    m.stage_weights = field(payload, "stage_weights").get<std::vector<double>>();
    m.stages = trees_from_json(field(payload, "stages"));
    if (m.stage_weights.size() != m.stages.size()) {
      throw std::runtime_error("model file: stage_weights and stages differ in length");
    }
    m.feature_importance = field(payload, "feature_importance").get<std::vector<double>>();
    out.model = std::move(m);
  } else if (type == "svm") {
    SvmModel m;
    m.weights = field(payload, "weights").get<std::vector<double>>();
    m.bias = field(payload, "bias").get<double>();
    m.means = field(payload, "means").get<std::vector<double>>();
    m.scales = field(payload, "scales").get<std::vector<double>>();
    m.feature_importance = field(payload, "feature_importance").get<std::vector<double>>();
    out.model = std::move(m);
  } else {
    throw std::runtime_error("model file: unknown model_type '" + type + "'");
  }
  return out;
}

void save_model(const Model& m, double threshold, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
  out << model_to_json(m, threshold).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed to write model file: " + path);
}

SavedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("model file " + path + ": " + e.what());
  }
  return model_from_json(j);
}

double predict_score(const Model& m, const std::vector<double>& x) {
  return std::visit([&](const auto& model) { return predict_score(model, x); }, m);
}

int predict_label(const Model& m, const std::vector<double>& x, double threshold) {
  return predict_score(m, x) >= threshold ? 1 : 0;
}

const std::vector<double>& feature_importance(const Model& m) {
  return std::visit(
      [](const auto& model) -> const std::vector<double>& {
        return model.feature_importance;
      },
      m);
}

}  // namespace abbrev::ml
