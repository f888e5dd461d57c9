#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "abbrev/ml.hpp"
#include "ml_grow.hpp"

namespace abbrev::ml {

namespace detail {

int check_training_data(const Matrix& x, const Labels& y,
                        const std::vector<double>& weights) {
  if (x.empty()) throw std::invalid_argument("training data is empty");
  if (x.size() != y.size()) {
    throw std::invalid_argument("feature rows and labels differ in length");
  }
  if (!weights.empty() && weights.size() != x.size()) {
    throw std::invalid_argument("sample weights and rows differ in length");
  }
  const std::size_t width = x.front().size();
  if (width == 0) throw std::invalid_argument("feature rows are empty");
  for (const auto& row : x) {
    if (row.size() != width) throw std::invalid_argument("feature matrix is ragged");
  }
  for (int label : y) {
    if (label != 0 && label != 1) throw std::invalid_argument("labels must be 0 or 1");
  }
  return static_cast<int>(width);
}

void check_both_classes(const Labels& y) {
  bool pos = false, neg = false;
  for (int label : y) (label == 1 ? pos : neg) = true;
  if (!pos || !neg) {
    throw std::invalid_argument("training data must contain both classes");
  }
}

namespace {

struct GrowContext {
  const Matrix& x;
  const std::vector<double>& targets;
  const std::vector<double>& weights;
  const GrowSpec& spec;
  std::vector<double>* importance;
  std::vector<TreeNode> nodes;
  std::vector<std::pair<double, int>> order;  // scratch for sorted scans
};

constexpr double kPure = 1e-12;

// A subtree waiting to be grown, with the parent link to patch once its root
// node gets an id.  parent < 0 marks the tree root.
struct Pending {
  std::vector<int> rows;
  int depth = 0;
  int parent = -1;
  bool is_right = false;
};

// Grows the tree with an explicit work stack: trees over skewed data can get
// deeper than the native call stack allows.  Nodes are numbered in preorder
// (parent, whole left subtree, whole right subtree) by pushing the right
// child first, which keeps numbering, importance accumulation, and rng
// consumption identical to the plain recursive formulation.
int grow(GrowContext& ctx, std::vector<int> root_rows) {
  const int root_id = static_cast<int>(ctx.nodes.size());
  std::vector<Pending> stack;
  stack.push_back({std::move(root_rows), 0, -1, false});
  while (!stack.empty()) {
    Pending item = std::move(stack.back());
    stack.pop_back();
    const std::vector<int>& rows = item.rows;

    double w = 0.0, wy = 0.0, wy2 = 0.0;
    for (int i : rows) {
      const double wi = ctx.weights[i];
      const double yi = ctx.targets[i];
      w += wi;
      wy += wi * yi;
      wy2 += wi * yi * yi;
    }
    const int node_id = static_cast<int>(ctx.nodes.size());
    ctx.nodes.emplace_back();
    ctx.nodes[node_id].value = w > 0.0 ? wy / w : 0.0;
    if (item.parent >= 0) {
      (item.is_right ? ctx.nodes[item.parent].right : ctx.nodes[item.parent].left) =
          node_id;
    }

    // Weighted sum of squared deviations; zero means the node is pure.
    const double node_var = w > 0.0 ? std::max(0.0, wy2 - wy * wy / w) : 0.0;
    const int n = static_cast<int>(rows.size());
    const bool depth_done = ctx.spec.max_depth > 0 && item.depth >= ctx.spec.max_depth;
    if (depth_done || n < ctx.spec.min_samples_split || node_var <= kPure) {
      continue;
    }

    std::vector<int> feats;
    if (ctx.spec.per_split) {
      const int want = std::min<int>(ctx.spec.per_split_count,
                                     static_cast<int>(ctx.spec.allowed.size()));
      for (std::size_t pick : ctx.spec.rng->sample_indices(
               ctx.spec.allowed.size(), static_cast<std::size_t>(want))) {
        feats.push_back(ctx.spec.allowed[pick]);
      }
    } else {
      feats = ctx.spec.allowed;
    }

    int best_feat = -1;
    double best_thresh = 0.0;
    double best_children = std::numeric_limits<double>::infinity();
    for (int f : feats) {
      ctx.order.clear();
      for (int i : rows) ctx.order.emplace_back(ctx.x[i][f], i);
      std::sort(ctx.order.begin(), ctx.order.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      double lw = 0.0, lwy = 0.0, lwy2 = 0.0;
      for (int p = 1; p < n; ++p) {
        const int i = ctx.order[p - 1].second;
        const double wi = ctx.weights[i];
        const double yi = ctx.targets[i];
        lw += wi;
        lwy += wi * yi;
        lwy2 += wi * yi * yi;
        if (!(ctx.order[p - 1].first < ctx.order[p].first)) continue;
        if (p < ctx.spec.min_samples_leaf || n - p < ctx.spec.min_samples_leaf) continue;
        const double rw = w - lw;
        if (lw <= 0.0 || rw <= 0.0) continue;
        // The midpoint of two values one ulp apart can round onto the upper
        // value, which would send both halves the same way; such a boundary
        // has no representable separating threshold, so skip it.
        const double mid = (ctx.order[p - 1].first + ctx.order[p].first) / 2.0;
        if (!(mid < ctx.order[p].first)) continue;
        const double lvar = std::max(0.0, lwy2 - lwy * lwy / lw);
        const double rvar = std::max(0.0, (wy2 - lwy2) - (wy - lwy) * (wy - lwy) / rw);
        const double children = lvar + rvar;
        if (children < best_children) {
          best_children = children;
          best_feat = f;
          best_thresh = mid;
        }
      }
    }
    if (best_feat < 0) continue;

    std::vector<int> left_rows, right_rows;
    left_rows.reserve(rows.size());
    for (int i : rows) {
      (ctx.x[i][best_feat] <= best_thresh ? left_rows : right_rows).push_back(i);
    }
    // Termination insurance: a split that fails to separate would recreate
    // this node forever, so fall back to a leaf instead.
    if (left_rows.empty() || right_rows.empty()) continue;

    if (ctx.importance != nullptr) {
      (*ctx.importance)[best_feat] += std::max(0.0, node_var - best_children);
    }

    ctx.nodes[node_id].feature = best_feat;
    ctx.nodes[node_id].threshold = best_thresh;
    stack.push_back({std::move(right_rows), item.depth + 1, node_id, true});
    stack.push_back({std::move(left_rows), item.depth + 1, node_id, false});
  }
  return root_id;
}

}  // namespace

Tree grow_tree(const Matrix& x, const std::vector<double>& targets,
               const std::vector<double>& weights, const std::vector<int>& rows,
               const GrowSpec& spec, std::vector<double>* importance) {
  GrowContext ctx{x, targets, weights, spec, importance, {}, {}};
  grow(ctx, rows);
  Tree tree;
  tree.nodes = std::move(ctx.nodes);
  return tree;
}

}  // namespace detail

TreeModel train_decision_tree(const Matrix& x, const Labels& y, const TrainConfig& cfg) {
  return train_decision_tree(x, y, {}, cfg);
}

TreeModel train_decision_tree(const Matrix& x, const Labels& y,
                              const std::vector<double>& sample_weights,
                              const TrainConfig& cfg) {
  const int n_features = detail::check_training_data(x, y, sample_weights);
  std::vector<double> targets(y.begin(), y.end());
  std::vector<double> weights = sample_weights;
  if (weights.empty()) weights.assign(x.size(), 1.0);

  detail::GrowSpec spec;
  spec.max_depth = std::max(0, cfg.max_depth);
  spec.min_samples_split = cfg.min_samples_split;
  spec.min_samples_leaf = cfg.min_samples_leaf;
  spec.allowed.resize(n_features);
  for (int f = 0; f < n_features; ++f) spec.allowed[f] = f;

  std::vector<int> rows(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rows[i] = static_cast<int>(i);

  std::vector<double> importance(n_features, 0.0);
  TreeModel model;
  model.tree = detail::grow_tree(x, targets, weights, rows, spec, &importance);
  model.n_features = n_features;
  model.feature_importance = normalize_importance(std::move(importance));
  return model;
}

double tree_predict(const Tree& tree, const std::vector<double>& x) {
  if (tree.nodes.empty()) return 0.0;
  int at = 0;
  while (tree.nodes[at].feature >= 0) {
    const TreeNode& node = tree.nodes[at];
    at = x[node.feature] <= node.threshold ? node.left : node.right;
  }
  return tree.nodes[at].value;
}

double predict_score(const TreeModel& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.n_features) {
    throw std::invalid_argument("feature vector dimension does not match the model");
  }
  return tree_predict(m.tree, x);
}

std::vector<double> normalize_importance(std::vector<double> raw) {
  double total = 0.0;
  bool ok = true;
  for (double& v : raw) {
    if (!std::isfinite(v)) {
      ok = false;
      break;
    }
    v = std::max(0.0, v);
    total += v;
  }
  if (!ok || total <= 0.0) {
    const double uniform = raw.empty() ? 0.0 : 1.0 / static_cast<double>(raw.size());
    std::fill(raw.begin(), raw.end(), uniform);
    return raw;
  }
  for (double& v : raw) v /= total;
  return raw;
}

}  // namespace abbrev::ml
