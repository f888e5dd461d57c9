#pragma once

#include <string>
#include <vector>

#include "abbrev/candgen.hpp"
#include "abbrev/corpus.hpp"
#include "abbrev/detect.hpp"
#include "abbrev/identify.hpp"
#include "abbrev/matchfeat.hpp"
#include "json.hpp"

namespace abbrev {

struct Confusion {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;

  long total() const { return tp + fp + fn + tn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

// Mann-Whitney ROC AUC: the fraction of (positive, negative) pairs ranked
// correctly, ties counted as one half.  Throws when only one class is
// present (the statistic is undefined).
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

// 2tp / (2tp + fp + fn); 0 with a warning when the denominator is 0.
double f1(const Confusion& c);
// (tp + tn) / total; 0 with a warning when there are no items.
double accuracy(const Confusion& c);

struct MetricsRow {
  std::string model;
  double roc_auc = 0.0;
  double accuracy = 0.0;
  double f1 = 0.0;
  Confusion confusion;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

// Token-level evaluation of every ensemble member plus the OR-vote ensemble.
MetricsReport evaluate_detection(const DetectorModel& model, const Corpus& test,
                                 const Dictionary& dict,
                                 const TokenizerConfig& cfg = TokenizerConfig::defaults());

// Which abbreviation occurrences the identification stage is scored on.
enum class EvalAbbrevSource { detected, gold };

// Pair-level evaluation: every generated candidate is one item, labeled by
// exact gold-span match.  Gold pairs that never become candidates are
// reported in the notes but excluded from the confusion.  `detector` may be
// null when source == gold.
MetricsReport evaluate_identification(const Corpus& test, const DetectorModel* detector,
                                      const MatcherModel& matcher,
                                      const CandidateRuleConfig& cand_cfg,
                                      const EmbeddingProvider& provider,
                                      const Dictionary& dict, EvalAbbrevSource source,
                                      const TokenizerConfig& cfg = TokenizerConfig::defaults());

}  // namespace abbrev
