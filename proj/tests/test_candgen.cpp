#include "abbrev/candgen.hpp"

#include <string>
#include <vector>

#include "abbrev/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace abbrev;

namespace {

std::vector<Token> span_of(const std::vector<std::string>& texts) {
  std::vector<Token> out;
  for (const auto& t : texts) out.push_back(Token{t});
  return out;
}

// Random documents over a small alphabet so rule edge cases (shared letters,
// substrings, repeated characters) actually occur.
Document random_doc(Rng& rng, int max_tokens) {
  static const std::vector<std::string> lower_chars = {"а", "б", "в", "г", "д",
                                                       "е", "с", "т"};
  static const std::vector<std::string> upper_chars = {"А", "Б", "В", "Г", "Д",
                                                       "Е", "С", "Т"};
  Document doc;
  doc.doc_id = "random";
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_tokens)));
  int sent = 0;
  for (int i = 0; i < n; ++i) {
    Token t;
    const std::uint64_t kind = rng.below(10);
    if (kind < 7) {
      const int len = 1 + static_cast<int>(rng.below(6));
      for (int c = 0; c < len; ++c) t.text += lower_chars[rng.below(lower_chars.size())];
    } else if (kind < 9) {
      const int len = 1 + static_cast<int>(rng.below(3));
      for (int c = 0; c < len; ++c) t.text += upper_chars[rng.below(upper_chars.size())];
      t.is_abbrev = true;
    } else {
      t.text = std::to_string(rng.below(100));
    }
    t.paren_depth = rng.chance(0.2) ? 1 : 0;
    if (rng.chance(0.15)) ++sent;
    t.sent_id = sent;
    doc.tokens.push_back(std::move(t));
  }
  return doc;
}

}  // namespace

TEST_CASE("maximum definition length follows min(len + 5, len * 2)") {
  CHECK(max_definition_length("С") == 2);
  CHECK(max_definition_length("СД") == 4);
  CHECK(max_definition_length("АБВ") == 6);
  CHECK(max_definition_length("АБВГ") == 8);
  CHECK(max_definition_length("АБВГД") == 10);
  CHECK(max_definition_length("АБВГДЕ") == 11);       // len + 5 takes over
  CHECK(max_definition_length("АБВГДЕЁЖЗИ") == 15);
  CHECK_THROWS_AS(max_definition_length(""), std::invalid_argument);
}

TEST_CASE("window radius follows min(len_max + 5, 2 * len_max)") {
  CHECK(window_radius(1) == 2);
  CHECK(window_radius(4) == 8);
  CHECK(window_radius(5) == 10);
  CHECK(window_radius(6) == 11);
  CHECK(window_radius(15) == 20);
  CHECK_THROWS_AS(window_radius(0), std::invalid_argument);
}

TEST_CASE("the four rules on hand-checked spans") {
  const CandidateRuleConfig cfg;
  SUBCASE("a textbook match passes") {
    CHECK(passes_rules("СД", span_of({"сахарный", "диабет"}), cfg));
  }
  SUBCASE("R1: first character must appear in the first token") {
    CHECK_FALSE(passes_rules("СД", span_of({"диабет", "сахарный"}), cfg));
    CHECK(passes_rules("ДС", span_of({"диабет", "сахарный"}), cfg));
  }
  SUBCASE("R2: character coverage is counted with multiplicity") {
    // Only one 'а' is available, so the second one counts as missing.
    CHECK_FALSE(passes_rules("АА", span_of({"ар"}), cfg));
    CHECK(passes_rules("АА", span_of({"ар", "ад"}), cfg));
  }
  SUBCASE("R2/R3 interplay with a loosened threshold") {
    // 2 of 3 characters found: coverage 0.667, 1 missing.
    const auto span = span_of({"ав", "бг"});
    CHECK_FALSE(passes_rules("АБС", span, cfg));  // fails coverage at 0.8
    CandidateRuleConfig loose = cfg;
    loose.char_coverage_min = 0.6;
    CHECK(passes_rules("АБС", span, loose));
    loose.max_missing_chars = 0;
    CHECK_FALSE(passes_rules("АБС", span, loose));  // now fails R3 instead
  }
  SUBCASE("R4: abbreviation embedded in a token disqualifies the span") {
    CHECK_FALSE(passes_rules("СД", span_of({"сдвиг", "данные"}), cfg));
    CHECK_FALSE(passes_rules("СД", span_of({"сахарный", "асдт"}), cfg));
  }
  SUBCASE("case folding can be turned off") {
    CandidateRuleConfig exact = cfg;
    exact.case_fold = false;
    CHECK_FALSE(passes_rules("СД", span_of({"сахарный", "диабет"}), exact));
    CHECK(passes_rules("СД", span_of({"Сахарный", "Диабет"}), exact));
  }
  SUBCASE("empty inputs are rejected") {
    CHECK_THROWS_AS(passes_rules("", span_of({"слово"}), cfg), std::invalid_argument);
    CHECK_THROWS_AS(passes_rules("СД", {}, cfg), std::invalid_argument);
  }
}

TEST_CASE("candidates on a hand-built document") {
  Document doc;
  doc.doc_id = "d";
  doc.tokens = {Token{"сахарный"}, Token{"диабет"}, Token{"СД", 1, 0, true},
                Token{"сегодня"}, Token{"диспансер"}};
  const std::vector<CandidateDefinition> cands = generate_candidates(doc, 2, {});

  // Every candidate respects the window, the length cap, the ordering, and
  // never contains the abbreviation index.
  const int len_max = max_definition_length("СД");
  const int delta = window_radius(len_max);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& c = cands[i];
    CHECK(c.abbrev_index == 2);
    CHECK(c.start <= c.end);
    CHECK(c.end - c.start + 1 <= len_max);
    CHECK_FALSE((c.start <= 2 && 2 <= c.end));
    if (c.side == CandidateDefinition::Side::left) {
      CHECK(c.start >= 2 - delta);
      CHECK(c.end <= 1);
    } else {
      CHECK(c.start >= 3);
      CHECK(c.end <= 2 + delta);
    }
    if (i > 0) {
      const bool ordered = cands[i - 1].start < c.start ||
                           (cands[i - 1].start == c.start && cands[i - 1].end < c.end);
      CHECK(ordered);
    }
  }

  // The gold span is among them.
  const bool has_gold = std::any_of(cands.begin(), cands.end(), [](const auto& c) {
    return c.start == 0 && c.end == 1;
  });
  CHECK(has_gold);

  CHECK_THROWS_AS(generate_candidates(doc, 99, {}), std::invalid_argument);
  CHECK_THROWS_AS(generate_candidates(doc, -1, {}), std::invalid_argument);
}

TEST_CASE("the generator agrees with exhaustive enumeration on random documents") {
  Rng rng(2024);
  std::vector<CandidateRuleConfig> configs(4);
  configs[1].sentence_bound = true;
  configs[2].char_coverage_min = 0.5;
  configs[2].max_missing_chars = 2;
  configs[3].case_fold = false;

  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Document doc = random_doc(rng, 40);
    const CandidateRuleConfig& cfg = configs[trial % configs.size()];
    for (int a = 0; a < static_cast<int>(doc.tokens.size()); ++a) {
      if (!doc.tokens[a].is_abbrev) continue;
      const auto got = generate_candidates(doc, a, cfg);
      const auto want = oracle::enumerate_candidates(doc, a, cfg);
      REQUIRE_MESSAGE(got == want, "doc trial ", trial, " abbrev index ", a);
      ++compared;
    }
  }
  CHECK(compared > 50);  // the generator actually got exercised
}

TEST_CASE("tightening the thresholds only removes candidates") {
  Rng rng(77);
  const auto is_subset = [](const std::vector<CandidateDefinition>& small,
                            const std::vector<CandidateDefinition>& big) {
    for (const auto& c : small) {
      if (std::find(big.begin(), big.end(), c) == big.end()) return false;
    }
    return true;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Document doc = random_doc(rng, 30);
    for (int a = 0; a < static_cast<int>(doc.tokens.size()); ++a) {
      if (!doc.tokens[a].is_abbrev) continue;
      CandidateRuleConfig loose, mid, tight;
      loose.char_coverage_min = 0.5;
      mid.char_coverage_min = 0.7;
      tight.char_coverage_min = 0.9;
      CHECK(is_subset(generate_candidates(doc, a, tight), generate_candidates(doc, a, mid)));
      CHECK(is_subset(generate_candidates(doc, a, mid), generate_candidates(doc, a, loose)));

      CandidateRuleConfig strict;
      strict.max_missing_chars = 0;
      CHECK(is_subset(generate_candidates(doc, a, strict), generate_candidates(doc, a, {})));

      CandidateRuleConfig bounded;
      bounded.sentence_bound = true;
      const auto in_sentence = generate_candidates(doc, a, bounded);
      CHECK(is_subset(in_sentence, generate_candidates(doc, a, {})));
      for (const auto& c : in_sentence) {
        for (int i = c.start; i <= c.end; ++i) {
          CHECK(doc.tokens[i].sent_id == doc.tokens[a].sent_id);
        }
      }
    }
  }
}

TEST_CASE("single-character abbreviations can never have candidates") {
  // R1 demands the character inside the first token; R4 forbids the
  // abbreviation as a substring of any token.  For one character these
  // contradict each other.
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Document doc = random_doc(rng, 20);
    Token t;
    t.text = "С";
    t.is_abbrev = true;
    doc.tokens.push_back(t);
    CHECK(generate_candidates(doc, static_cast<int>(doc.tokens.size()) - 1, {}).empty());
  }
}
