#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abbrev/candgen.hpp"
#include "abbrev/ml.hpp"
#include "abbrev/synth.hpp"
#include "json.hpp"

namespace abbrev {

// Every tunable of the pipeline in one flat structure.  The CLI initializes
// it from an optional --config JSON file, lets explicit flags override single
// fields, and echoes the effective configuration into every output header so
// runs can be reproduced from their artifacts alone.
struct RunConfig {
  // Paths.
  std::string corpus;
  std::string dict;
  std::string stopwords;
  std::string embeddings;
  std::string model_out;
  std::string model_in;
  std::string detector_model;
  std::string matcher_model;
  std::string out;

  // Shared run parameters.
  std::uint64_t seed = 0;
  double split_ratio = 0.8;
  std::string split_unit = "document";  // or "token" (stage-1 commands only)
  std::vector<std::string> members = {"svm", "forest", "boosting"};
  std::string matcher = "forest";
  double threshold = 0.5;
  std::string eval_on = "detected";  // or "gold"

  // Candidate rules.
  double coverage_min = 0.8;
  int max_missing = 1;
  bool sentence_bound = false;

  // Training.
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
  bool class_weight = false;

  // Synthetic corpus generation.
  int target_tokens = 5000;
  double abbrev_ratio = 0.06;
  int tokens_per_doc = 120;
  double paren_prob = 0.9;
  double jitter_prob = 0.1;
  double missing_def_prob = 0.05;
  double decoy_prob = 0.05;

  ml::TrainConfig train_config() const;
  CandidateRuleConfig rule_config() const;
  SynthConfig synth_config() const;

  nlohmann::json to_json() const;
  // Rejects unknown keys so config-file typos fail loudly.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::string& path);

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

}  // namespace abbrev
