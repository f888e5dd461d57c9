#include "abbrev/runconfig.hpp"

#include <fstream>
#include <stdexcept>

namespace abbrev {

ml::TrainConfig RunConfig::train_config() const {
  ml::TrainConfig cfg;
  cfg.seed = seed;
  cfg.n_trees = n_trees;
  cfg.max_depth = max_depth;
  cfg.min_samples_split = min_samples_split;
  cfg.min_samples_leaf = min_samples_leaf;
  cfg.boosting_rounds = boosting_rounds;
  cfg.learning_rate = learning_rate;
  cfg.svm_epochs = svm_epochs;
  cfg.svm_regularization = svm_regularization;
  cfg.per_split_features = per_split_features;
  cfg.adaboost = adaboost;
  return cfg;
}

CandidateRuleConfig RunConfig::rule_config() const {
  CandidateRuleConfig cfg;
  cfg.char_coverage_min = coverage_min;
  cfg.max_missing_chars = max_missing;
  cfg.sentence_bound = sentence_bound;
  return cfg;
}

SynthConfig RunConfig::synth_config() const {
  SynthConfig cfg;
  cfg.seed = seed;
  cfg.target_tokens = target_tokens;
  cfg.abbrev_ratio = abbrev_ratio;
  cfg.tokens_per_doc = tokens_per_doc;
  cfg.paren_prob = paren_prob;
  cfg.jitter_prob = jitter_prob;
  cfg.missing_def_prob = missing_def_prob;
  cfg.decoy_prob = decoy_prob;
  return cfg;
}

nlohmann::json RunConfig::to_json() const {
  return {{"corpus", corpus},
          {"dict", dict},
          {"stopwords", stopwords},
          {"embeddings", embeddings},
          {"model_out", model_out},
          {"model_in", model_in},
          {"detector_model", detector_model},
          {"matcher_model", matcher_model},
          {"out", out},
          {"seed", seed},
          {"split_ratio", split_ratio},
          {"split_unit", split_unit},
          {"members", members},
          {"matcher", matcher},
          {"threshold", threshold},
          {"eval_on", eval_on},
          {"coverage_min", coverage_min},
          {"max_missing", max_missing},
          {"sentence_bound", sentence_bound},
          {"n_trees", n_trees},
          {"max_depth", max_depth},
          {"min_samples_split", min_samples_split},
          {"min_samples_leaf", min_samples_leaf},
          {"boosting_rounds", boosting_rounds},
          {"learning_rate", learning_rate},
          {"svm_epochs", svm_epochs},
          {"svm_regularization", svm_regularization},
          {"per_split_features", per_split_features},
          {"adaboost", adaboost},
          {"class_weight", class_weight},
          {"target_tokens", target_tokens},
          {"abbrev_ratio", abbrev_ratio},
          {"tokens_per_doc", tokens_per_doc},
          {"paren_prob", paren_prob},
          {"jitter_prob", jitter_prob},
          {"missing_def_prob", missing_def_prob},
          {"decoy_prob", decoy_prob}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
  RunConfig cfg;
  const nlohmann::json defaults = cfg.to_json();
  for (const auto& [key, value] : j.items()) {
    if (!defaults.contains(key)) {
      throw std::runtime_error("unknown config key '" + key + "'");
    }
  }
  const auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("corpus", cfg.corpus);
  get("dict", cfg.dict);
  get("stopwords", cfg.stopwords);
  get("embeddings", cfg.embeddings);
  get("model_out", cfg.model_out);
  get("model_in", cfg.model_in);
  get("detector_model", cfg.detector_model);
  get("matcher_model", cfg.matcher_model);
  get("out", cfg.out);
  get("seed", cfg.seed);
  get("split_ratio", cfg.split_ratio);
  get("split_unit", cfg.split_unit);
  get("members", cfg.members);
  get("matcher", cfg.matcher);
  get("threshold", cfg.threshold);
  get("eval_on", cfg.eval_on);
  get("coverage_min", cfg.coverage_min);
  get("max_missing", cfg.max_missing);
  get("sentence_bound", cfg.sentence_bound);
  get("n_trees", cfg.n_trees);
  get("max_depth", cfg.max_depth);
  get("min_samples_split", cfg.min_samples_split);
  get("min_samples_leaf", cfg.min_samples_leaf);
  get("boosting_rounds", cfg.boosting_rounds);
  get("learning_rate", cfg.learning_rate);
  get("svm_epochs", cfg.svm_epochs);
  get("svm_regularization", cfg.svm_regularization);
  get("per_split_features", cfg.per_split_features);
  get("adaboost", cfg.adaboost);
  get("class_weight", cfg.class_weight);
  get("target_tokens", cfg.target_tokens);
  get("abbrev_ratio", cfg.abbrev_ratio);
  get("tokens_per_doc", cfg.tokens_per_doc);
  get("paren_prob", cfg.paren_prob);
  get("jitter_prob", cfg.jitter_prob);
  get("missing_def_prob", cfg.missing_def_prob);
  get("decoy_prob", cfg.decoy_prob);
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config file " + path + ": " + e.what());
  }
  return from_json(j);
}

}  // namespace abbrev
