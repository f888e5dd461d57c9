#include "abbrev/detect.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "abbrev/utf8.hpp"

namespace abbrev {

DetectionFeatures extract_detection_features(const Token& t, const Dictionary& d,
                                             const TokenizerConfig& cfg) {
  if (t.text.empty()) throw std::invalid_argument("cannot featurize an empty token");
  const std::vector<char32_t> cps = utf8::decode(t.text);

  DetectionFeatures f;
  f.length = static_cast<int>(cps.size());
  f.in_dict = in_dictionary(d, t);

  int letters = 0, digits = 0, uppers = 0, vowels = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (utf8::is_letter(cp)) {
      ++letters;
      if (cfg.is_vowel(utf8::to_lower(cp))) ++vowels;
      if (utf8::is_upper(cp)) {
        ++uppers;
        if (i > 0) f.internal_capital = true;
      }
    } else if (utf8::is_digit(cp)) {
      ++digits;
    } else {
      f.has_special = true;
    }
  }

  const int total = static_cast<int>(cps.size());
  if (letters == total) {
    f.char_composition = CharComposition::letters_only;
  } else if (digits == total) {
    f.char_composition = CharComposition::digits_only;
  } else {
    f.char_composition = CharComposition::mixed;
  }

  if (letters == 0) {
    f.letter_composition = LetterComposition::no_letters;
  } else if (vowels == letters) {
    f.letter_composition = LetterComposition::vowels_only;
  } else if (vowels == 0) {
    f.letter_composition = LetterComposition::consonants_only;
  } else {
    f.letter_composition = LetterComposition::mixed;
  }

  f.capital_pct = letters > 0 ? static_cast<double>(uppers) / letters : 0.0;
  return f;
}

std::vector<double> vectorize_detection(const DetectionFeatures& f) {
  std::vector<double> v(kDetectionVectorDim, 0.0);
  v[0] = f.has_special ? 1.0 : 0.0;
  v[1 + static_cast<int>(f.char_composition)] = 1.0;
  v[4 + static_cast<int>(f.letter_composition)] = 1.0;
  v[8] = static_cast<double>(f.length);
  v[9] = f.capital_pct;
  v[10] = f.internal_capital ? 1.0 : 0.0;
  v[11] = f.in_dict ? 1.0 : 0.0;
  return v;
}

namespace {

void check_member_name(const std::string& name) {
  if (name != "svm" && name != "forest" && name != "boosting") {
    throw std::invalid_argument("unknown detector member '" + name +
                                "' (expected svm, forest, or boosting)");
  }
}

}  // namespace

DetectorModel train_detector(const Corpus& train, const Dictionary& d,
                             const DetectorConfig& cfg, const TokenizerConfig& tok_cfg) {
  if (cfg.members.empty()) throw std::invalid_argument("detector needs at least one member");
  for (const auto& name : cfg.members) check_member_name(name);

  ml::Matrix x;
  ml::Labels y;
  for (const Document& doc : train.documents) {
    for (const Token& t : doc.tokens) {
      x.push_back(vectorize_detection(extract_detection_features(t, d, tok_cfg)));
      y.push_back(t.is_abbrev ? 1 : 0);
    }
  }
  if (x.empty()) throw std::invalid_argument("training corpus has no tokens");
  const long positives = std::count(y.begin(), y.end(), 1);
  const long negatives = static_cast<long>(y.size()) - positives;
  if (positives == 0 || negatives == 0) {
    throw std::invalid_argument("detector training needs both classes of tokens");
  }

  std::vector<double> weights;
  if (cfg.class_weight) {
    const double n = static_cast<double>(y.size());
    const double w_pos = n / (2.0 * static_cast<double>(positives));
    const double w_neg = n / (2.0 * static_cast<double>(negatives));
    weights.reserve(y.size());
    for (int label : y) weights.push_back(label == 1 ? w_pos : w_neg);
  }

  DetectorModel model;
  for (const auto& name : cfg.members) {
    DetectorMember member;
    member.name = name;
    member.threshold = cfg.threshold;
    if (name == "svm") {
      member.model = ml::train_linear_svm(x, y, weights, cfg.train);
    } else if (name == "forest") {
      member.model = ml::train_random_forest(x, y, weights, cfg.train);
    } else {
      member.model = ml::train_gradient_boosting(x, y, weights, cfg.train);
    }
    model.members.push_back(std::move(member));
  }
  return model;
}

double member_score(const DetectorMember& m, const std::vector<double>& x) {
  if (const auto* forest = std::get_if<ml::ForestModel>(&m.model)) {
    return ml::forest_vote_fraction(*forest, x);
  }
  return ml::predict_score(m.model, x);
}

std::vector<int> detect(const DetectorModel& model, const Document& doc,
                        const Dictionary& d, const TokenizerConfig& cfg) {
  std::vector<int> out;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const auto x = vectorize_detection(extract_detection_features(doc.tokens[i], d, cfg));
    for (const DetectorMember& m : model.members) {
      if (ml::predict_label(m.model, x, m.threshold) == 1) {
        out.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return out;
}

std::vector<double> detection_scores(const DetectorModel& model, const Document& doc,
                                     const Dictionary& d, const TokenizerConfig& cfg) {
  std::vector<double> out;
  out.reserve(doc.tokens.size());
  for (const Token& t : doc.tokens) {
    const auto x = vectorize_detection(extract_detection_features(t, d, cfg));
    double best = 0.0;
    for (const DetectorMember& m : model.members) {
      best = std::max(best, member_score(m, x));
    }
    out.push_back(best);
  }
  return out;
}

std::vector<double> detector_importance(const DetectorModel& model) {
  if (model.members.empty()) throw std::invalid_argument("detector has no members");
  const DetectorMember* source = &model.members.front();
  for (const DetectorMember& m : model.members) {
    if (m.name == "forest") {
      source = &m;
      break;
    }
  }
  const std::vector<double>& raw = ml::feature_importance(source->model);
  if (static_cast<int>(raw.size()) != kDetectionVectorDim) {
    throw std::runtime_error("detector member importance has unexpected dimension");
  }
  // Collapse the one-hot blocks back onto their logical features.
  std::vector<double> out(kDetectionFeatureNames.size(), 0.0);
  out[0] = raw[0];
  out[1] = raw[1] + raw[2] + raw[3];
  out[2] = raw[4] + raw[5] + raw[6] + raw[7];
  out[3] = raw[8];
  out[4] = raw[9];
  out[5] = raw[10];
  out[6] = raw[11];
  return ml::normalize_importance(std::move(out));
}

nlohmann::json detector_to_json(const DetectorModel& model) {
  nlohmann::json members = nlohmann::json::array();
  double threshold = 0.5;
  for (const DetectorMember& m : model.members) {
    members.push_back({{"name", m.name}, {"model", ml::model_to_json(m.model, m.threshold)}});
    threshold = m.threshold;
  }
  return ml::envelope("detector", threshold, {{"members", std::move(members)}});
}

DetectorModel detector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("format_version") || !j.contains("model_type")) {
    throw std::runtime_error("detector file: missing envelope fields");
  }
  if (j.at("format_version").get<int>() != 1) {
    throw std::runtime_error("detector file: unsupported format_version");
  }
  if (j.at("model_type").get<std::string>() != "detector") {
    throw std::runtime_error("detector file: model_type is not 'detector'");
  }
  DetectorModel model;
  for (const auto& mj : j.at("payload").at("members")) {
    DetectorMember member;
    member.name = mj.at("name").get<std::string>();
    check_member_name(member.name);
    ml::SavedModel saved = ml::model_from_json(mj.at("model"));
    member.model = std::move(saved.model);
    member.threshold = saved.threshold;
    model.members.push_back(std::move(member));
  }
  if (model.members.empty()) throw std::runtime_error("detector file: no members");
  return model;
}

void save_detector(const DetectorModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
  out << detector_to_json(model).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed to write model file: " + path);
}

DetectorModel load_detector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("detector file " + path + ": " + e.what());
  }
  return detector_from_json(j);
}

}  // namespace abbrev
