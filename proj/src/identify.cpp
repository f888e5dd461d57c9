#include "abbrev/identify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

#include "abbrev/logging.hpp"

namespace abbrev {

double PairDataset::generation_recall() const {
  if (gold_total == 0) return 0.0;
  return static_cast<double>(gold_covered) / static_cast<double>(gold_total);
}

PairDataset build_pair_dataset(const Corpus& corpus, const CandidateRuleConfig& cfg,
                               const EmbeddingProvider& provider) {
  PairDataset out;
  for (const Document& doc : corpus.documents) {
    std::set<std::pair<int, std::pair<int, int>>> gold;
    for (const GoldPair& g : doc.gold_pairs) {
      gold.insert({g.abbrev_index, {g.def_start, g.def_end}});
    }
    out.gold_total += static_cast<int>(gold.size());

    for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
      if (!doc.tokens[i].is_abbrev) continue;
      for (const CandidateDefinition& cand : generate_candidates(doc, i, cfg)) {
        PairExample ex;
        ex.doc_id = doc.doc_id;
        ex.candidate = cand;
        ex.features = extract_pair_features(doc, cand, provider);
        const auto key = std::pair{cand.abbrev_index, std::pair{cand.start, cand.end}};
        ex.label = gold.count(key) > 0;
        if (ex.label) ++out.gold_covered;
        out.examples.push_back(std::move(ex));
      }
    }
  }
  if (out.examples.empty()) {
    log::warn("pair dataset is empty: no candidates were generated");
  }
  return out;
}

namespace {

ml::Matrix pair_matrix(const std::vector<PairExample>& examples) {
  ml::Matrix x;
  x.reserve(examples.size());
  for (const PairExample& ex : examples) x.push_back(vectorize_pair(ex.features));
  return x;
}

}  // namespace

MatcherModel train_matcher(const std::vector<PairExample>& examples,
                           const std::string& model_type, const ml::TrainConfig& cfg,
                           double threshold) {
  if (model_type != "forest" && model_type != "boosting") {
    throw std::invalid_argument("unknown matcher type '" + model_type +
                                "' (expected forest or boosting)");
  }
  if (examples.empty()) throw std::invalid_argument("no pair examples to train on");
  const ml::Matrix x = pair_matrix(examples);
  ml::Labels y;
  y.reserve(examples.size());
  for (const PairExample& ex : examples) y.push_back(ex.label ? 1 : 0);

  MatcherModel model;
  model.kind = model_type;
  model.threshold = threshold;
  if (model_type == "forest") {
    model.model = ml::train_random_forest(x, y, cfg);
  } else {
    model.model = ml::train_gradient_boosting(x, y, cfg);
  }
  return model;
}

nlohmann::json matcher_to_json(const MatcherModel& model) {
  return ml::envelope("matcher", model.threshold,
                      {{"kind", model.kind},
                       {"model", ml::model_to_json(model.model, model.threshold)}});
}

MatcherModel matcher_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("format_version") || !j.contains("model_type")) {
    throw std::runtime_error("matcher file: missing envelope fields");
  }
  if (j.at("format_version").get<int>() != 1) {
    throw std::runtime_error("matcher file: unsupported format_version");
  }
  if (j.at("model_type").get<std::string>() != "matcher") {
    throw std::runtime_error("matcher file: model_type is not 'matcher'");
  }
  MatcherModel model;
  model.threshold = j.at("threshold").get<double>();
  model.kind = j.at("payload").at("kind").get<std::string>();
  if (model.kind != "forest" && model.kind != "boosting") {
    throw std::runtime_error("matcher file: unknown kind '" + model.kind + "'");
  }
  model.model = ml::model_from_json(j.at("payload").at("model")).model;
  return model;
}

void save_matcher(const MatcherModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
  out << matcher_to_json(model).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed to write model file: " + path);
}

MatcherModel load_matcher(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("matcher file " + path + ": " + e.what());
  }
  return matcher_from_json(j);
}

DocumentResult identify(const Document& doc, const DetectorModel& detector,
                        const MatcherModel& matcher, const CandidateRuleConfig& cfg,
                        const EmbeddingProvider& provider, const Dictionary& dict,
                        const TokenizerConfig& tok_cfg) {
  DocumentResult result;
  result.doc_id = doc.doc_id;
  result.detected = detect(detector, doc, dict, tok_cfg);

  for (int a : result.detected) {
    std::vector<AcceptedPair> accepted;
    for (const CandidateDefinition& cand : generate_candidates(doc, a, cfg)) {
      const PairFeatures f = extract_pair_features(doc, cand, provider);
      const std::vector<double> x = vectorize_pair(f);
      const double score = ml::predict_score(matcher.model, x);
      if (score < matcher.threshold) continue;
      AcceptedPair pair;
      pair.abbrev_index = a;
      pair.abbrev_text = doc.tokens[a].text;
      pair.start = cand.start;
      pair.end = cand.end;
      for (int i = cand.start; i <= cand.end; ++i) {
        if (i > cand.start) pair.definition_text += ' ';
        pair.definition_text += doc.tokens[i].text;
      }
      pair.score = score;
      accepted.push_back(std::move(pair));
    }
    if (accepted.empty()) {
      result.unresolved.push_back(a);
      continue;
    }
    // Flag the best pair: highest score, then smaller distance, then
    // leftmost start.
    std::size_t best = 0;
    for (std::size_t k = 1; k < accepted.size(); ++k) {
      const AcceptedPair& cur = accepted[k];
      const AcceptedPair& top = accepted[best];
      if (cur.score > top.score) {
        best = k;
        continue;
      }
      if (cur.score < top.score) continue;
      const int cur_dist = pair_distance(a, cur.start, cur.end);
      const int top_dist = pair_distance(a, top.start, top.end);
      if (cur_dist < top_dist || (cur_dist == top_dist && cur.start < top.start)) {
        best = k;
      }
    }
    accepted[best].best = true;
    for (AcceptedPair& pair : accepted) result.pairs.push_back(std::move(pair));
  }
  return result;
}

}  // namespace abbrev
