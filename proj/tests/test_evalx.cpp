#include "abbrev/evalx.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "abbrev/rng.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace abbrev;

namespace {

ml::TrainConfig small_train() {
  ml::TrainConfig cfg;
  cfg.n_trees = 10;
  cfg.boosting_rounds = 10;
  cfg.svm_epochs = 50;
  return cfg;
}

Corpus fixture_corpus() { return load_corpus(std::string(FIXTURE_DIR) + "/corpus40.jsonl"); }

}  // namespace

TEST_CASE("ROC AUC on hand-checked rankings") {
  CHECK(roc_auc({0.9, 0.8, 0.7, 0.6}, {1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(roc_auc({0.9, 0.8, 0.7, 0.6}, {0, 0, 1, 1}) == doctest::Approx(0.0));
  CHECK(roc_auc({0.5, 0.5}, {1, 0}) == doctest::Approx(0.5));
  // One tied positive/negative pair at 0.4 contributes a half.
  CHECK(roc_auc({0.4, 0.4, 0.3, 0.8}, {1, 0, 0, 1}) == doctest::Approx(0.875));
}

TEST_CASE("ROC AUC validates its inputs") {
  CHECK_THROWS_AS(roc_auc({0.1, 0.2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(roc_auc({0.1, 0.2}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(roc_auc({0.1}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(roc_auc({0.1, 0.2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(roc_auc({}, {}), std::invalid_argument);
}

TEST_CASE("rank-based AUC equals the pairwise count, ties included") {
  Rng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(49));
    std::vector<double> scores;
    std::vector<int> labels;
    bool has[2] = {false, false};
    for (int i = 0; i < n; ++i) {
      // Coarse quantization forces plenty of tied scores.
      scores.push_back(static_cast<double>(rng.below(10)) / 10.0);
      labels.push_back(static_cast<int>(rng.below(2)));
      has[labels.back()] = true;
    }
    if (!has[0] || !has[1]) continue;
    CHECK(roc_auc(scores, labels) == doctest::Approx(oracle::pairwise_auc(scores, labels)));
  }
}

TEST_CASE("AUC is invariant to monotone transforms and flips under negation") {
  Rng rng(606);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int i = 0; i < 40; ++i) {
    scores.push_back(rng.real01());
    labels.push_back(i % 2);
  }
  const double base = roc_auc(scores, labels);

  std::vector<double> transformed;
  for (double s : scores) transformed.push_back(std::exp(3.0 * s) + 7.0);
  CHECK(roc_auc(transformed, labels) == doctest::Approx(base));

  std::vector<double> negated;
  for (double s : scores) negated.push_back(-s);
  CHECK(roc_auc(negated, labels) == doctest::Approx(1.0 - base));
}

TEST_CASE("F1 and accuracy on a published-style confusion") {
  const Confusion c{6, 4, 1, 761};
  CHECK(c.total() == 772);
  CHECK(f1(c) == doctest::Approx(0.706).epsilon(0.001));
  CHECK(accuracy(c) == doctest::Approx(0.994).epsilon(0.001));
}

TEST_CASE("degenerate confusions score 0 instead of dividing by zero") {
  CHECK(f1(Confusion{}) == 0.0);
  CHECK(accuracy(Confusion{}) == 0.0);
  CHECK(f1(Confusion{0, 0, 0, 10}) == 0.0);
  CHECK(accuracy(Confusion{0, 0, 0, 10}) == doctest::Approx(1.0));
}

TEST_CASE("detection evaluation reports each member plus the ensemble") {
  const Corpus corpus = fixture_corpus();
  DetectorConfig cfg;
  cfg.train = small_train();
  const DetectorModel model = train_detector(corpus, {}, cfg);

  const MetricsReport report = evaluate_detection(model, corpus, {});
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[0].model == "svm");
  CHECK(report.rows[1].model == "forest");
  CHECK(report.rows[2].model == "boosting");
  CHECK(report.rows[3].model == "ensemble");

  const StatsReport stats = corpus_stats(corpus);
  for (const MetricsRow& row : report.rows) {
    CHECK(row.confusion.total() == static_cast<long>(stats.tokens));
    CHECK(row.roc_auc >= 0.0);
    CHECK(row.roc_auc <= 1.0);
  }

  // The ensemble confusion matches a recount from detect().
  long tp = 0, fp = 0, fn = 0, tn = 0;
  for (const Document& doc : corpus.documents) {
    const std::vector<int> hits = detect(model, doc, {});
    for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
      const bool flagged =
          std::find(hits.begin(), hits.end(), i) != hits.end();
      const bool truth = doc.tokens[i].is_abbrev;
      if (truth && flagged) ++tp;
      else if (!truth && flagged) ++fp;
      else if (truth && !flagged) ++fn;
      else ++tn;
    }
  }
  CHECK(report.rows[3].confusion == Confusion{tp, fp, fn, tn});

  CHECK_THROWS_AS(evaluate_detection(model, Corpus{}, {}), std::invalid_argument);
}

TEST_CASE("a single-class evaluation degrades to AUC 0 with a note") {
  const Corpus corpus = fixture_corpus();
  DetectorConfig cfg;
  cfg.members = {"forest"};
  cfg.train = small_train();
  const DetectorModel model = train_detector(corpus, {}, cfg);

  Corpus no_abbrevs = corpus;
  no_abbrevs.documents.resize(4);
  for (Document& doc : no_abbrevs.documents) {
    doc.gold_pairs.clear();
    for (Token& t : doc.tokens) t.is_abbrev = false;
  }
  const MetricsReport report = evaluate_detection(model, no_abbrevs, {});
  for (const MetricsRow& row : report.rows) CHECK(row.roc_auc == 0.0);
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes[0].find("single-class") != std::string::npos);
}

TEST_CASE("identification evaluation scores generated pairs") {
  const Corpus corpus = fixture_corpus();
  const HashNgramEmbedder emb;
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);
  const MatcherModel matcher = train_matcher(ds.examples, "forest", small_train());

  const MetricsReport report =
      evaluate_identification(corpus, nullptr, matcher, {}, emb, {}, EvalAbbrevSource::gold);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].model == "forest");
  CHECK(report.rows[0].confusion.total() == static_cast<long>(ds.examples.size()));
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.back().find("gold pairs") != std::string::npos);

  CHECK_THROWS_AS(evaluate_identification(corpus, nullptr, matcher, {}, emb, {},
                                          EvalAbbrevSource::detected),
                  std::invalid_argument);
}

TEST_CASE("reports serialize to JSON and render as a table") {
  MetricsReport report;
  report.rows.push_back({"forest", 0.91, 0.97, 0.72, Confusion{6, 4, 1, 761}});
  report.notes.push_back("just a note");

  const nlohmann::json j = report.to_json();
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["model"] == "forest");
  CHECK(j["rows"][0]["roc_auc"] == doctest::Approx(0.91));
  CHECK(j["rows"][0]["accuracy"] == doctest::Approx(0.97));
  CHECK(j["rows"][0]["f1"] == doctest::Approx(0.72));
  CHECK(j["rows"][0]["tp"] == 6);
  CHECK(j["rows"][0]["fp"] == 4);
  CHECK(j["rows"][0]["fn"] == 1);
  CHECK(j["rows"][0]["tn"] == 761);
  CHECK(j["notes"].size() == 1);

  const std::string table = report.to_table();
  CHECK(table.find("forest") != std::string::npos);
  CHECK(table.find("just a note") != std::string::npos);
  CHECK(table.find("roc_auc") != std::string::npos);
}
