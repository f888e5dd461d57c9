#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace abbrev {

struct Token {
  std::string text;
  int paren_depth = 0;
  int sent_id = 0;
  bool is_abbrev = false;

  bool operator==(const Token&) const = default;
};

// Definition span for one abbreviation occurrence; def_end is inclusive.
struct GoldPair {
  int abbrev_index = 0;
  int def_start = 0;
  int def_end = 0;

  bool operator==(const GoldPair&) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<Token> tokens;
  std::vector<GoldPair> gold_pairs;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;

  bool operator==(const Corpus&) const = default;
};

struct StatsReport {
  std::size_t documents = 0;
  std::size_t tokens = 0;
  std::size_t abbreviations = 0;
  std::size_t gold_pairs = 0;
  double abbrev_ratio = 0.0;
};

// Throws std::runtime_error naming the doc_id on any invariant violation.
void validate_document(const Document& doc);
void validate_corpus(const Corpus& corpus);

nlohmann::json document_to_json(const Document& doc);
Document document_from_json(const nlohmann::json& j);

// JSON Lines, one document per line. A leading {"_config": ...} line written
// by the CLI is skipped on load. Unknown fields are rejected.
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);

// Document-level split: |train| = round(ratio * |documents|), deterministic
// for a fixed seed. Throws on corpora with fewer than 2 documents.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double ratio, std::uint64_t seed);

StatsReport corpus_stats(const Corpus& corpus);

// Fixture manifest: the counts a generated corpus is expected to load with.
nlohmann::json corpus_manifest(const Corpus& corpus);

}  // namespace abbrev
