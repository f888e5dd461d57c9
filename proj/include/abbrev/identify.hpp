#pragma once

#include <string>
#include <vector>

#include "abbrev/candgen.hpp"
#include "abbrev/corpus.hpp"
#include "abbrev/detect.hpp"
#include "abbrev/matchfeat.hpp"
#include "abbrev/ml.hpp"
#include "json.hpp"

namespace abbrev {

// One labeled (abbreviation, candidate-definition) pair.
struct PairExample {
  std::string doc_id;
  CandidateDefinition candidate;
  PairFeatures features;
  bool label = false;  // true iff the span exactly matches a gold pair
};

struct PairDataset {
  std::vector<PairExample> examples;
  int gold_total = 0;    // gold pairs over the corpus
  int gold_covered = 0;  // gold pairs whose span appeared among candidates

  // Fraction of gold pairs the candidate generator reproduced.
  double generation_recall() const;
};

// Builds training data for the pair classifier.  Candidates come from the
// gold abbreviation labels (not a detector) so stage-2 training is not
// polluted by stage-1 errors.
PairDataset build_pair_dataset(const Corpus& corpus, const CandidateRuleConfig& cfg,
                               const EmbeddingProvider& provider);

struct MatcherModel {
  std::string kind;  // "forest" | "boosting"
  ml::Model model;
  double threshold = 0.5;
};

MatcherModel train_matcher(const std::vector<PairExample>& examples,
                           const std::string& model_type, const ml::TrainConfig& cfg,
                           double threshold = 0.5);

nlohmann::json matcher_to_json(const MatcherModel& model);
MatcherModel matcher_from_json(const nlohmann::json& j);
void save_matcher(const MatcherModel& model, const std::string& path);
MatcherModel load_matcher(const std::string& path);

// A candidate the matcher accepted.  Exactly one accepted pair per
// abbreviation occurrence carries best=true: the highest-scoring one, ties
// broken by smaller distance, then leftmost start.
struct AcceptedPair {
  int abbrev_index = 0;
  std::string abbrev_text;
  int start = 0;
  int end = 0;
  std::string definition_text;
  double score = 0.0;
  bool best = false;
};

struct DocumentResult {
  std::string doc_id;
  std::vector<int> detected;    // stage-1 output, ascending
  std::vector<AcceptedPair> pairs;
  std::vector<int> unresolved;  // detected indices with no accepted pair
};

// Full two-stage pipeline on one document: detect, generate candidates,
// featurize, classify.
DocumentResult identify(const Document& doc, const DetectorModel& detector,
                        const MatcherModel& matcher, const CandidateRuleConfig& cfg,
                        const EmbeddingProvider& provider, const Dictionary& dict,
                        const TokenizerConfig& tok_cfg = TokenizerConfig::defaults());

}  // namespace abbrev
