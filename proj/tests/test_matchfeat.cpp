#include "abbrev/matchfeat.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
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

// Provider that reports one dimension but returns another: used to check the
// contract enforcement.
class LyingProvider : public EmbeddingProvider {
 public:
  int dim() const override { return 4; }
  std::vector<double> embed(const std::string&) const override { return {1.0, 2.0}; }
};

class ZeroProvider : public EmbeddingProvider {
 public:
  int dim() const override { return 3; }
  std::vector<double> embed(const std::string&) const override { return {0.0, 0.0, 0.0}; }
};

}  // namespace

TEST_CASE("pair distance is the nearer span endpoint") {
  CHECK(pair_distance(10, 4, 7) == 3);
  CHECK(pair_distance(5, 6, 6) == 1);
  CHECK(pair_distance(0, 3, 9) == 3);
  CHECK(pair_distance(4, 5, 9) == 1);
  CHECK_THROWS_AS(pair_distance(5, 3, 7), std::invalid_argument);  // contains a
  CHECK_THROWS_AS(pair_distance(5, 7, 3), std::invalid_argument);  // inverted
}

TEST_CASE("first-letter alignment is greedy and in order") {
  CHECK(first_letter_matches("СД", span_of({"сахарный", "диабет"})) == 2);
  // The first comparison consumes 'с' against 'д'; only 'д' then matches.
  CHECK(first_letter_matches("СД", span_of({"диабет", "сахарный"})) == 1);
  CHECK(first_letter_matches("сд", span_of({"Сахарный", "Диабет"})) == 2);
  CHECK(first_letter_matches("АБВ", span_of({"арка", "боль", "вена"})) == 3);
  CHECK(first_letter_matches("ГД", span_of({"арка", "боль"})) == 0);
  // Matching never exceeds either sequence.
  CHECK(first_letter_matches("А", span_of({"арка", "апноэ", "атака"})) == 1);
}

TEST_CASE("paren flag covers the abbreviation or the whole span") {
  Document doc;
  doc.doc_id = "d";
  doc.tokens = {Token{"сахарный", 0}, Token{"диабет", 0}, Token{"СД", 1, 0, true},
                Token{"типа", 1}, Token{"два", 1}};
  CHECK(paren_flag(doc, 2, 0, 1));        // abbreviation itself in parens
  CHECK(paren_flag(doc, 2, 3, 4));        // whole span in parens
  doc.tokens[2].paren_depth = 0;
  CHECK_FALSE(paren_flag(doc, 2, 0, 1));  // nothing parenthesized
  CHECK(paren_flag(doc, 2, 3, 4));
  doc.tokens[4].paren_depth = 0;
  CHECK_FALSE(paren_flag(doc, 2, 3, 4));  // span only partly in parens
  CHECK_THROWS_AS(paren_flag(doc, 2, 3, 99), std::invalid_argument);
}

TEST_CASE("the hash n-gram embedder is deterministic and unit length") {
  const HashNgramEmbedder emb;
  CHECK(emb.dim() == 256);
  const std::vector<double> a = emb.embed("диабет");
  CHECK(a == emb.embed("диабет"));
  CHECK(a == emb.embed("ДИАБЕТ"));  // lowercased before hashing
  REQUIRE(static_cast<int>(a.size()) == emb.dim());
  double norm = 0.0;
  for (double v : a) norm += v * v;
  CHECK(std::sqrt(norm) == doctest::Approx(1.0));
  CHECK(a != emb.embed("диспансер"));
  CHECK_THROWS_AS(HashNgramEmbedder(0), std::invalid_argument);
}

TEST_CASE("semantic similarity is cosine against the span mean") {
  const HashNgramEmbedder emb;
  CHECK(semantic_similarity("сд", span_of({"сд"}), emb) == doctest::Approx(1.0));
  const double sim = semantic_similarity("сд", span_of({"сахарный", "диабет"}), emb);
  CHECK(sim >= -1.0);
  CHECK(sim <= 1.0);

  const ZeroProvider zero;
  CHECK(semantic_similarity("сд", span_of({"сахарный"}), zero) == 0.0);
  const LyingProvider lying;
  CHECK_THROWS_AS(semantic_similarity("сд", span_of({"сахарный"}), lying),
                  std::runtime_error);
}

TEST_CASE("LCS on hand-checked strings") {
  CHECK(lcs_length("абв", "абв") == 3);
  CHECK(lcs_length("абв", "где") == 0);
  CHECK(lcs_length("гдк", "где") == 2);
  CHECK(lcs_length("сд", "сахарный диабет") == 2);
  CHECK(lcs_length("", "абв") == 0);
  // The span overload lowercases and joins with spaces.
  CHECK(lcs_length("СД", span_of({"сахарный", "диабет"})) == 2);
}

TEST_CASE("the DP agrees with exhaustive subsequence search") {
  Rng rng(321);
  const std::string alphabet = "абвгд";
  const auto random_string = [&](int max_len) {
    std::string s;
    const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len + 1)));
    for (int i = 0; i < len; ++i) {
      // Each Cyrillic letter is 2 bytes in UTF-8.
      const std::size_t pick = 2 * rng.below(alphabet.size() / 2);
      s += alphabet.substr(pick, 2);
    }
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::string a = random_string(10);
    const std::string b = random_string(10);
    REQUIRE_MESSAGE(lcs_length(a, b) == oracle::exhaustive_lcs(a, b), "a=", a, " b=", b);
  }
}

TEST_CASE("table embedders load, serve, and count misses") {
  const std::string path = "matchfeat_table_test.txt";
  {
    std::ofstream out(path);
    out << "диабет\t1.0 0.0 0.0\n";
    out << "сахарный\t0.0 1.0 0.0\n";
  }
  const TableEmbedder emb = TableEmbedder::load(path);
  CHECK(emb.dim() == 3);
  CHECK(emb.embed("диабет") == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(emb.missing_count() == 0);
  CHECK(emb.embed("неизвестное") == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(emb.missing_count() == 1);
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "диабет\t1.0 0.0\n";
    out << "сахарный\t0.0 1.0 0.5\n";  // inconsistent dimension
  }
  CHECK_THROWS_WITH_AS(TableEmbedder::load(path), doctest::Contains("line 2"),
                       std::runtime_error);
  std::remove(path.c_str());

  { std::ofstream out(path); }
  CHECK_THROWS_AS(TableEmbedder::load(path), std::runtime_error);  // empty
  std::remove(path.c_str());
  CHECK_THROWS_AS(TableEmbedder::load("no_such_table.txt"), std::runtime_error);
}

TEST_CASE("pair features compose the five signals in vector order") {
  Document doc;
  doc.doc_id = "d";
  doc.tokens = {Token{"сахарный"}, Token{"диабет"}, Token{"СД", 1, 0, true},
                Token{"типа"}};
  CandidateDefinition cand;
  cand.abbrev_index = 2;
  cand.start = 0;
  cand.end = 1;

  const HashNgramEmbedder emb;
  const PairFeatures f = extract_pair_features(doc, cand, emb);
  CHECK(f.distance == 1);
  CHECK(f.first_letter_matches == 2);
  CHECK(f.paren_flag);
  CHECK(f.lcs_len == 2);
  CHECK(f.semantic_sim ==
        doctest::Approx(semantic_similarity("СД", {doc.tokens.data(), 2}, emb)));

  const std::vector<double> v = vectorize_pair(f);
  REQUIRE(static_cast<int>(v.size()) == kPairVectorDim);
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(2.0));
  CHECK(v[2] == doctest::Approx(1.0));
  CHECK(v[3] == doctest::Approx(f.semantic_sim));
  CHECK(v[4] == doctest::Approx(2.0));

  cand.end = 99;
  CHECK_THROWS_AS(extract_pair_features(doc, cand, emb), std::invalid_argument);
}
