#pragma once

#include <array>
#include <string>
#include <vector>

#include "abbrev/corpus.hpp"
#include "abbrev/ml.hpp"
#include "abbrev/textprep.hpp"
#include "json.hpp"

namespace abbrev {

// Token-internal features used by the stage-1 abbreviation detector.

enum class CharComposition { letters_only, digits_only, mixed };
enum class LetterComposition { vowels_only, consonants_only, mixed, no_letters };

struct DetectionFeatures {
  bool has_special = false;  // any character that is neither letter nor digit
  CharComposition char_composition = CharComposition::mixed;
  LetterComposition letter_composition = LetterComposition::no_letters;
  int length = 0;             // character (code point) count
  double capital_pct = 0.0;   // uppercase letters / total letters; 0 if none
  bool internal_capital = false;  // uppercase anywhere after the first char
  bool in_dict = false;
};

// Logical feature names, in vector order (the two categoricals are one-hot
// expanded in the numeric vector but count as one feature each here).
inline constexpr std::array<const char*, 7> kDetectionFeatureNames = {
    "has_special",      "char_composition", "letter_composition", "length",
    "capital_pct",      "internal_capital", "in_dict"};

// Numeric layout: [has_special, char_composition one-hot (letters_only,
// digits_only, mixed), letter_composition one-hot (vowels_only,
// consonants_only, mixed, no_letters), length, capital_pct,
// internal_capital, in_dict].
inline constexpr int kDetectionVectorDim = 12;

DetectionFeatures extract_detection_features(const Token& t, const Dictionary& d,
                                             const TokenizerConfig& cfg);
std::vector<double> vectorize_detection(const DetectionFeatures& f);

struct DetectorConfig {
  std::vector<std::string> members = {"svm", "forest", "boosting"};
  ml::TrainConfig train;
  double threshold = 0.5;
  // When set, samples are weighted inversely to class frequency so the rare
  // positive class is not drowned out.
  bool class_weight = false;
};

struct DetectorMember {
  std::string name;  // "svm" | "forest" | "boosting"
  ml::Model model;
  double threshold = 0.5;
};

// OR-voting ensemble: a token is flagged when any member flags it.
struct DetectorModel {
  std::vector<DetectorMember> members;
};

DetectorModel train_detector(const Corpus& train, const Dictionary& d,
                             const DetectorConfig& cfg,
                             const TokenizerConfig& tok_cfg = TokenizerConfig::defaults());

// Calibrated score of one member for ranking: the forest reports its
// positive-vote fraction, boosting and SVM their logistic scores.
double member_score(const DetectorMember& m, const std::vector<double>& x);

// Indices of tokens any member labels positive, ascending.
std::vector<int> detect(const DetectorModel& model, const Document& doc,
                        const Dictionary& d,
                        const TokenizerConfig& cfg = TokenizerConfig::defaults());

// Per-token ensemble score = max of member calibrated scores (for ROC AUC).
std::vector<double> detection_scores(const DetectorModel& model, const Document& doc,
                                     const Dictionary& d,
                                     const TokenizerConfig& cfg = TokenizerConfig::defaults());

// Importance of the 7 logical features, aggregated from the 12-dim vector of
// the forest member (first member if no forest); non-negative, sums to 1.
std::vector<double> detector_importance(const DetectorModel& model);

nlohmann::json detector_to_json(const DetectorModel& model);
DetectorModel detector_from_json(const nlohmann::json& j);
void save_detector(const DetectorModel& model, const std::string& path);
DetectorModel load_detector(const std::string& path);

}  // namespace abbrev
