#include "abbrev/synth.hpp"

#include <cmath>
#include <set>
#include <string>

#include "abbrev/candgen.hpp"
#include "abbrev/identify.hpp"
#include "abbrev/matchfeat.hpp"
#include "doctest.h"

using namespace abbrev;

TEST_CASE("synthetic corpora are deterministic in their configuration") {
  SynthConfig cfg;
  cfg.seed = 5;
  cfg.target_tokens = 800;
  const Corpus a = synth_corpus(cfg);
  const Corpus b = synth_corpus(cfg);
  CHECK(a == b);

  cfg.seed = 6;
  CHECK_FALSE(a == synth_corpus(cfg));
}

TEST_CASE("configuration limits are enforced") {
  SynthConfig cfg;
  cfg.target_tokens = 0;
  CHECK_THROWS_AS(synth_corpus(cfg), std::invalid_argument);
  cfg = {};
  cfg.abbrev_ratio = 0.5;
  CHECK_THROWS_AS(synth_corpus(cfg), std::invalid_argument);
  cfg = {};
  cfg.abbrev_ratio = -0.01;
  CHECK_THROWS_AS(synth_corpus(cfg), std::invalid_argument);
}

TEST_CASE("generated corpora validate and hit the size targets") {
  SynthConfig cfg;
  cfg.seed = 12;
  cfg.target_tokens = 3000;
  const Corpus corpus = synth_corpus(cfg);
  validate_corpus(corpus);

  const StatsReport stats = corpus_stats(corpus);
  CHECK(stats.tokens >= 3000);
  CHECK(stats.tokens < 3000 + 4 * static_cast<std::size_t>(cfg.tokens_per_doc));
  CHECK(stats.abbreviations > 0);
  CHECK(stats.gold_pairs > 0);
  // The planted rate tracks the requested one.
  CHECK(std::abs(stats.abbrev_ratio - cfg.abbrev_ratio) < 0.03);

  std::set<std::string> ids;
  for (const Document& doc : corpus.documents) {
    CHECK(ids.insert(doc.doc_id).second);
    CHECK_FALSE(doc.tokens.empty());
  }
}

TEST_CASE("every planted definition is reachable by the candidate rules") {
  SynthConfig cfg;
  cfg.seed = 31;
  cfg.target_tokens = 2000;
  const Corpus corpus = synth_corpus(cfg);

  for (const Document& doc : corpus.documents) {
    for (const GoldPair& gp : doc.gold_pairs) {
      const std::span<const Token> span{doc.tokens.data() + gp.def_start,
                                        static_cast<std::size_t>(gp.def_end - gp.def_start + 1)};
      CHECK(passes_rules(doc.tokens[gp.abbrev_index].text, span, {}));
    }
  }

  // And therefore the generator reproduces them all.
  const HashNgramEmbedder emb;
  const PairDataset ds = build_pair_dataset(corpus, {}, emb);
  CHECK(ds.generation_recall() == doctest::Approx(1.0));
}

TEST_CASE("most planted abbreviations are parenthesized") {
  SynthConfig cfg;
  cfg.seed = 44;
  cfg.target_tokens = 2000;
  const Corpus corpus = synth_corpus(cfg);
  int in_parens = 0;
  int total = 0;
  for (const Document& doc : corpus.documents) {
    for (const Token& t : doc.tokens) {
      if (!t.is_abbrev) continue;
      ++total;
      if (t.paren_depth > 0) ++in_parens;
    }
  }
  REQUIRE(total > 0);
  CHECK(static_cast<double>(in_parens) / total > 0.6);
}

TEST_CASE("toy datasets have the promised shapes") {
  ml::Matrix x;
  ml::Labels y;
  make_separable_dataset(50, 3, &x, &y);
  REQUIRE(x.size() == 50);
  REQUIRE(y.size() == 50);
  int pos = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].size() == 2);
    pos += y[i];
  }
  CHECK(pos == 25);  // alternating labels

  make_xor_dataset(80, 4, &x, &y);
  REQUIRE(x.size() == 80);
  bool corner_seen[2][2] = {};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int cx = x[i][0] > 0.5 ? 1 : 0;
    const int cy = x[i][1] > 0.5 ? 1 : 0;
    CHECK(y[i] == (cx != cy ? 1 : 0));
    corner_seen[cx][cy] = true;
  }
  CHECK(corner_seen[0][0]);
  CHECK(corner_seen[0][1]);
  CHECK(corner_seen[1][0]);
  CHECK(corner_seen[1][1]);

  CHECK_THROWS_AS(make_separable_dataset(1, 0, &x, &y), std::invalid_argument);
  CHECK_THROWS_AS(make_xor_dataset(3, 0, &x, &y), std::invalid_argument);
}
