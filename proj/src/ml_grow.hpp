#pragma once

#include <vector>

#include "abbrev/ml.hpp"
#include "abbrev/rng.hpp"

// Internal helpers shared by the tree-based trainers.  Not installed.

namespace abbrev::ml::detail {

struct GrowSpec {
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
  int min_samples_leaf = 1;
  std::vector<int> allowed;  // global feature ids the tree may split on
  bool per_split = false;    // resample `per_split_count` of `allowed` at each split
  int per_split_count = 0;
  Rng* rng = nullptr;  // required when per_split is true
};

// Grows a least-squares regression tree over the referenced rows.  With 0/1
// targets the variance criterion is Gini divided by two, so the same grower
// serves classification.  Splits use midpoint thresholds between adjacent
// distinct values; ties on the criterion keep the first candidate seen, i.e.
// the lowest feature id and then the lowest threshold.  When `importance` is
// non-null the weighted impurity decrease of every split is added to it,
// indexed by global feature id.
Tree grow_tree(const Matrix& x, const std::vector<double>& targets,
               const std::vector<double>& weights, const std::vector<int>& rows,
               const GrowSpec& spec, std::vector<double>* importance);

// Throws std::invalid_argument unless x is a non-empty rectangular matrix
// whose row count matches y (and weights, when non-empty).  Returns the
// feature count.
int check_training_data(const Matrix& x, const Labels& y,
                        const std::vector<double>& weights);

// Throws std::invalid_argument unless y contains both classes.
void check_both_classes(const Labels& y);

}  // namespace abbrev::ml::detail
