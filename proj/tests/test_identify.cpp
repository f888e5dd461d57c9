#include "abbrev/identify.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "abbrev/corpus.hpp"
#include "abbrev/detect.hpp"
#include "abbrev/matchfeat.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace abbrev;

namespace {

Document textbook_doc() {
  Document doc;
  doc.doc_id = "d1";
  doc.tokens = {Token{"сахарный"}, Token{"диабет"}, Token{"СД", 1, 0, true},
                Token{"выявлен"}, Token{"сегодня"}};
  doc.gold_pairs = {{2, 0, 1}};
  return doc;
}

ml::TrainConfig small_train() {
  ml::TrainConfig cfg;
  cfg.n_trees = 10;
  cfg.boosting_rounds = 10;
  cfg.svm_epochs = 50;
  return cfg;
}

Corpus fixture_corpus() { return load_corpus(std::string(FIXTURE_DIR) + "/corpus40.jsonl"); }

}  // namespace

TEST_CASE("the pair dataset labels exactly the gold spans") {
  Corpus corpus;
  corpus.documents = {textbook_doc()};
  const HashNgramEmbedder emb;
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);

  REQUIRE_FALSE(ds.examples.empty());
  CHECK(ds.gold_total == 1);
  CHECK(ds.gold_covered == 1);
  CHECK(ds.generation_recall() == doctest::Approx(1.0));

  int positives = 0;
  for (const PairExample& ex : ds.examples) {
    CHECK(ex.doc_id == "d1");
    if (ex.label) {
      ++positives;
      CHECK(ex.candidate.start == 0);
      CHECK(ex.candidate.end == 1);
    }
  }
  CHECK(positives == 1);
}

TEST_CASE("a gold span the rules reject is reported as uncovered") {
  Document doc;
  doc.doc_id = "d2";
  // "щука корм" shares no characters with СД, so no rule lets it through.
  doc.tokens = {Token{"щука"}, Token{"корм"}, Token{"СД", 0, 0, true}};
  doc.gold_pairs = {{2, 0, 1}};
  Corpus corpus;
  corpus.documents = {doc};
  const HashNgramEmbedder emb;
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);
  CHECK(ds.gold_total == 1);
  CHECK(ds.gold_covered == 0);
  CHECK(ds.generation_recall() == doctest::Approx(0.0));
  for (const PairExample& ex : ds.examples) CHECK_FALSE(ex.label);
}

TEST_CASE("matcher training validates kind and data") {
  const HashNgramEmbedder emb;
  Corpus corpus;
  corpus.documents = {textbook_doc()};
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);

  CHECK_THROWS_AS(train_matcher(ds.examples, "svm", small_train()), std::invalid_argument);
  CHECK_THROWS_AS(train_matcher({}, "forest", small_train()), std::invalid_argument);

  const MatcherModel forest = train_matcher(ds.examples, "forest", small_train(), 0.4);
  CHECK(forest.kind == "forest");
  CHECK(forest.threshold == doctest::Approx(0.4));
  const MatcherModel boosting = train_matcher(ds.examples, "boosting", small_train());
  CHECK(boosting.kind == "boosting");
}

TEST_CASE("matchers round-trip through JSON and disk") {
  const HashNgramEmbedder emb;
  Corpus corpus = fixture_corpus();
  corpus.documents.resize(10);
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);
  const MatcherModel model = train_matcher(ds.examples, "forest", small_train());

  const nlohmann::json j = matcher_to_json(model);
  CHECK(j["model_type"] == "matcher");
  CHECK(matcher_to_json(matcher_from_json(j)).dump() == j.dump());

  const std::string path = "matcher_roundtrip_test.json";
  save_matcher(model, path);
  CHECK(matcher_to_json(load_matcher(path)).dump() == j.dump());
  std::remove(path.c_str());

  nlohmann::json wrong = j;
  wrong["model_type"] = "detector";
  CHECK_THROWS_AS(matcher_from_json(wrong), std::runtime_error);
  wrong = j;
  wrong["payload"]["kind"] = "svm";
  CHECK_THROWS_AS(matcher_from_json(wrong), std::runtime_error);
  wrong = j;
  wrong["format_version"] = 7;
  CHECK_THROWS_AS(matcher_from_json(wrong), std::runtime_error);
}

TEST_CASE("the full pipeline produces consistent document results") {
  const Corpus corpus = fixture_corpus();
  const HashNgramEmbedder emb;

  DetectorConfig dcfg;
  dcfg.train = small_train();
  const DetectorModel detector = train_detector(corpus, {}, dcfg);
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);
  const MatcherModel matcher = train_matcher(ds.examples, "forest", small_train());

  const CandidateRuleConfig rules;
  int docs_with_pairs = 0;
  for (const Document& doc : corpus.documents) {
    const DocumentResult result = identify(doc, detector, matcher, rules, emb, {});
    CHECK(result.doc_id == doc.doc_id);
    CHECK(result.detected == detect(detector, doc, {}));

    // Accepted pairs clear the threshold; per abbreviation exactly one is
    // best, and it wins on (score, smaller distance, smaller start).
    for (int a : result.detected) {
      std::vector<const AcceptedPair*> mine;
      for (const AcceptedPair& p : result.pairs) {
        if (p.abbrev_index == a) mine.push_back(&p);
      }
      const bool unresolved =
          std::find(result.unresolved.begin(), result.unresolved.end(), a) !=
          result.unresolved.end();
      CHECK(mine.empty() == unresolved);
      if (mine.empty()) continue;
      ++docs_with_pairs;

      int best_count = 0;
      const AcceptedPair* best = nullptr;
      for (const AcceptedPair* p : mine) {
        CHECK(p->score >= matcher.threshold);
        CHECK(p->abbrev_text == doc.tokens[a].text);
        if (p->best) {
          ++best_count;
          best = p;
        }
      }
      REQUIRE(best_count == 1);
      const auto rank = [a](const AcceptedPair* p) {
        return std::tuple(-p->score, pair_distance(a, p->start, p->end), p->start);
      };
      for (const AcceptedPair* p : mine) CHECK(rank(best) <= rank(p));
    }

    // Every reported pair belongs to a detected abbreviation and quotes the
    // span text verbatim.
    for (const AcceptedPair& p : result.pairs) {
      CHECK(std::find(result.detected.begin(), result.detected.end(), p.abbrev_index) !=
            result.detected.end());
      std::string joined;
      for (int i = p.start; i <= p.end; ++i) {
        if (i > p.start) joined += ' ';
        joined += doc.tokens[i].text;
      }
      CHECK(p.definition_text == joined);
    }
  }
  CHECK(docs_with_pairs > 0);
}
