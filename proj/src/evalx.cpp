#include "abbrev/evalx.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "abbrev/logging.hpp"
#include "abbrev/ml.hpp"

namespace abbrev {

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("scores and labels differ in length");
  }
  const std::size_t n = scores.size();
  long n_pos = 0;
  for (int label : labels) {
    if (label != 0 && label != 1) throw std::invalid_argument("labels must be 0 or 1");
    n_pos += label;
  }
  const long n_neg = static_cast<long>(n) - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw std::invalid_argument("roc_auc is undefined with a single class");
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of average ranks over positives; ties share the mean of their ranks,
  // which reproduces the half-credit pairwise count exactly.
  double pos_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[idx[j]] == scores[idx[i]]) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[idx[k]] == 1) pos_rank_sum += avg_rank;
    }
    i = j;
  }
  const double u = pos_rank_sum -
                   static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double f1(const Confusion& c) {
  const long denom = 2 * c.tp + c.fp + c.fn;
  if (denom == 0) {
    log::warn("f1 is undefined (no positives predicted or present); reporting 0");
    return 0.0;
  }
  return 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
}

double accuracy(const Confusion& c) {
  const long total = c.total();
  if (total == 0) {
    log::warn("accuracy is undefined on zero items; reporting 0");
    return 0.0;
  }
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const MetricsRow& r : rows) {
    rows_json.push_back({{"model", r.model},
                         {"roc_auc", r.roc_auc},
                         {"accuracy", r.accuracy},
                         {"f1", r.f1},
                         {"tp", r.confusion.tp},
                         {"fp", r.confusion.fp},
                         {"fn", r.confusion.fn},
                         {"tn", r.confusion.tn}});
  }
  return {{"rows", rows_json}, {"notes", notes}};
}

std::string MetricsReport::to_table() const {
  std::size_t name_width = 8;
  for (const MetricsRow& r : rows) name_width = std::max(name_width, r.model.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "model"
      << std::right << std::setw(9) << "roc_auc" << std::setw(10) << "accuracy"
      << std::setw(8) << "f1" << std::setw(8) << "tp" << std::setw(8) << "fp"
      << std::setw(8) << "fn" << std::setw(8) << "tn" << '\n';
  for (const MetricsRow& r : rows) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << r.model
        << std::right << std::fixed << std::setprecision(3) << std::setw(9) << r.roc_auc
        << std::setw(10) << r.accuracy << std::setw(8) << r.f1 << std::setw(8)
        << r.confusion.tp << std::setw(8) << r.confusion.fp << std::setw(8)
        << r.confusion.fn << std::setw(8) << r.confusion.tn << '\n';
  }
  for (const std::string& note : notes) out << "note: " << note << '\n';
  return out.str();
}

namespace {

Confusion count_confusion(const std::vector<int>& predicted, const std::vector<int>& labels) {
  Confusion c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1) {
      (predicted[i] == 1 ? c.tp : c.fn) += 1;
    } else {
      (predicted[i] == 1 ? c.fp : c.tn) += 1;
    }
  }
  return c;
}

// AUC for a report row; degenerate label sets yield 0 plus a note instead of
// failing the whole evaluation.
double row_auc(const std::vector<double>& scores, const std::vector<int>& labels,
               const std::string& row_name, std::vector<std::string>& notes) {
  try {
    return roc_auc(scores, labels);
  } catch (const std::invalid_argument&) {
    notes.push_back("roc_auc undefined for " + row_name +
                    " (single-class labels); reported as 0");
    return 0.0;
  }
}

}  // namespace

MetricsReport evaluate_detection(const DetectorModel& model, const Corpus& test,
                                 const Dictionary& dict, const TokenizerConfig& cfg) {
  ml::Matrix vectors;
  std::vector<int> labels;
  for (const Document& doc : test.documents) {
    for (const Token& t : doc.tokens) {
      vectors.push_back(vectorize_detection(extract_detection_features(t, dict, cfg)));
      labels.push_back(t.is_abbrev ? 1 : 0);
    }
  }
  if (vectors.empty()) throw std::invalid_argument("test corpus has no tokens");

  MetricsReport report;
  std::vector<double> ens_scores(vectors.size(), 0.0);
  std::vector<int> ens_predicted(vectors.size(), 0);
  for (const DetectorMember& member : model.members) {
    std::vector<double> scores(vectors.size());
    std::vector<int> predicted(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      scores[i] = member_score(member, vectors[i]);
      predicted[i] = ml::predict_label(member.model, vectors[i], member.threshold);
      ens_scores[i] = std::max(ens_scores[i], scores[i]);
      ens_predicted[i] |= predicted[i];
    }
    MetricsRow row;
    row.model = member.name;
    row.confusion = count_confusion(predicted, labels);
    row.roc_auc = row_auc(scores, labels, member.name, report.notes);
    row.accuracy = accuracy(row.confusion);
    row.f1 = f1(row.confusion);
    report.rows.push_back(std::move(row));
  }

  MetricsRow ens;
  ens.model = "ensemble";
  ens.confusion = count_confusion(ens_predicted, labels);
  ens.roc_auc = row_auc(ens_scores, labels, "ensemble", report.notes);
  ens.accuracy = accuracy(ens.confusion);
  ens.f1 = f1(ens.confusion);
  report.rows.push_back(std::move(ens));
  return report;
}

MetricsReport evaluate_identification(const Corpus& test, const DetectorModel* detector,
                                      const MatcherModel& matcher,
                                      const CandidateRuleConfig& cand_cfg,
                                      const EmbeddingProvider& provider,
                                      const Dictionary& dict, EvalAbbrevSource source,
                                      const TokenizerConfig& cfg) {
  if (source == EvalAbbrevSource::detected && detector == nullptr) {
    throw std::invalid_argument("evaluating on detected abbreviations needs a detector");
  }

  std::vector<double> scores;
  std::vector<int> labels, predicted;
  long gold_total = 0, gold_seen = 0;
  for (const Document& doc : test.documents) {
    std::set<std::pair<int, std::pair<int, int>>> gold;
    for (const GoldPair& g : doc.gold_pairs) {
      gold.insert({g.abbrev_index, {g.def_start, g.def_end}});
    }
    gold_total += static_cast<long>(gold.size());

    std::vector<int> abbrevs;
    if (source == EvalAbbrevSource::detected) {
      abbrevs = detect(*detector, doc, dict, cfg);
    } else {
      for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
        if (doc.tokens[i].is_abbrev) abbrevs.push_back(i);
      }
    }

    for (int a : abbrevs) {
      for (const CandidateDefinition& cand : generate_candidates(doc, a, cand_cfg)) {
        const std::vector<double> x =
            vectorize_pair(extract_pair_features(doc, cand, provider));
        const double score = ml::predict_score(matcher.model, x);
        const auto key = std::pair{cand.abbrev_index, std::pair{cand.start, cand.end}};
        const bool is_gold = gold.count(key) > 0;
        if (is_gold) ++gold_seen;
        scores.push_back(score);
        labels.push_back(is_gold ? 1 : 0);
        predicted.push_back(score >= matcher.threshold ? 1 : 0);
      }
    }
  }

  MetricsReport report;
  MetricsRow row;
  row.model = matcher.kind;
  row.confusion = count_confusion(predicted, labels);
  row.roc_auc = row_auc(scores, labels, matcher.kind, report.notes);
  row.accuracy = accuracy(row.confusion);
  row.f1 = f1(row.confusion);
  report.rows.push_back(std::move(row));
  report.notes.push_back(
      "evaluated " + std::to_string(scores.size()) + " generated pairs; " +
      std::to_string(gold_seen) + " of " + std::to_string(gold_total) +
      " gold pairs appeared among them (missing gold pairs are not counted)");
  return report;
}

}  // namespace abbrev
