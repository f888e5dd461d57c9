#include "abbrev/corpus.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

#include "abbrev/rng.hpp"

namespace abbrev {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& item : obj.items()) {
    if (allowed.find(item.key()) == allowed.end()) {
      fail(where + ": unknown field \"" + item.key() + "\"");
    }
  }
}

}  // namespace

void validate_document(const Document& doc) {
  const auto where = [&doc](const std::string& what) {
    return "document \"" + doc.doc_id + "\": " + what;
  };
  if (doc.doc_id.empty()) fail("document with empty doc_id");
  const int n = static_cast<int>(doc.tokens.size());
  for (const Token& t : doc.tokens) {
    if (t.text.empty()) fail(where("empty token text"));
    if (t.text.find(' ') != std::string::npos) fail(where("token text contains a space"));
    if (t.paren_depth < 0) fail(where("negative paren_depth"));
    if (t.sent_id < 0) fail(where("negative sent_id"));
  }
  for (const GoldPair& gp : doc.gold_pairs) {
    if (gp.abbrev_index < 0 || gp.abbrev_index >= n)
      fail(where("gold abbrev_index out of range"));
    if (gp.def_start < 0 || gp.def_end >= n) fail(where("gold definition span out of range"));
    if (gp.def_start > gp.def_end) fail(where("gold def_start > def_end"));
    if (gp.abbrev_index >= gp.def_start && gp.abbrev_index <= gp.def_end)
      fail(where("gold definition span contains the abbreviation index"));
    if (!doc.tokens[static_cast<std::size_t>(gp.abbrev_index)].is_abbrev)
      fail(where("gold abbrev_index points at a token not labeled is_abbrev"));
  }
}

void validate_corpus(const Corpus& corpus) {
  std::unordered_set<std::string> seen;
  for (const Document& doc : corpus.documents) {
    validate_document(doc);
    if (!seen.insert(doc.doc_id).second) fail("duplicate doc_id \"" + doc.doc_id + "\"");
  }
}

json document_to_json(const Document& doc) {
  json tokens = json::array();
  for (const Token& t : doc.tokens) {
    tokens.push_back({{"text", t.text},
                      {"paren_depth", t.paren_depth},
                      {"sent_id", t.sent_id},
                      {"is_abbrev", t.is_abbrev}});
  }
  json pairs = json::array();
  for (const GoldPair& gp : doc.gold_pairs) {
    pairs.push_back({{"abbrev_index", gp.abbrev_index},
                     {"def_start", gp.def_start},
                     {"def_end", gp.def_end}});
  }
  return {{"doc_id", doc.doc_id}, {"tokens", std::move(tokens)}, {"gold_pairs", std::move(pairs)}};
}

Document document_from_json(const json& j) {
  if (!j.is_object()) fail("document line is not a JSON object");
  reject_unknown_fields(j, {"doc_id", "tokens", "gold_pairs"}, "document");
  Document doc;
  doc.doc_id = j.at("doc_id").get<std::string>();
  if (j.contains("tokens")) {
    for (const json& tj : j.at("tokens")) {
      reject_unknown_fields(tj, {"text", "paren_depth", "sent_id", "is_abbrev"},
                            "document \"" + doc.doc_id + "\" token");
      Token t;
      t.text = tj.at("text").get<std::string>();
      t.paren_depth = tj.value("paren_depth", 0);
      t.sent_id = tj.value("sent_id", 0);
      t.is_abbrev = tj.value("is_abbrev", false);
      doc.tokens.push_back(std::move(t));
    }
  }
  if (j.contains("gold_pairs")) {
    for (const json& pj : j.at("gold_pairs")) {
      reject_unknown_fields(pj, {"abbrev_index", "def_start", "def_end"},
                            "document \"" + doc.doc_id + "\" gold pair");
      GoldPair gp;
      gp.abbrev_index = pj.at("abbrev_index").get<int>();
      gp.def_start = pj.at("def_start").get<int>();
      gp.def_end = pj.at("def_end").get<int>();
      doc.gold_pairs.push_back(gp);
    }
  }
  validate_document(doc);
  return doc;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open corpus file: " + path);
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(path + ":" + std::to_string(line_no) + ": malformed JSON line: " + e.what());
    }
    if (line_no == 1 && j.is_object() && j.size() == 1 && j.contains("_config")) {
      continue;  // CLI output header
    }
    try {
      corpus.documents.push_back(document_from_json(j));
    } catch (const std::exception& e) {
      fail(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate_corpus(corpus);
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write corpus file: " + path);
  for (const Document& doc : corpus.documents) {
    out << document_to_json(doc).dump() << "\n";
  }
  if (!out) fail("write failed: " + path);
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double ratio, std::uint64_t seed) {
  if (ratio <= 0.0 || ratio >= 1.0) fail("split ratio must be in (0, 1)");
  const std::size_t n = corpus.documents.size();
  if (n < 2) fail("cannot split a corpus with fewer than 2 documents");
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  const auto n_train =
      static_cast<std::size_t>(std::lround(ratio * static_cast<double>(n)));
  std::vector<bool> in_train(n, false);
  for (std::size_t i = 0; i < n_train && i < n; ++i) in_train[order[i]] = true;
  Corpus train;
  Corpus test;
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? train : test).documents.push_back(corpus.documents[i]);
  }
  return {std::move(train), std::move(test)};
}

StatsReport corpus_stats(const Corpus& corpus) {
  StatsReport r;
  r.documents = corpus.documents.size();
  for (const Document& doc : corpus.documents) {
    r.tokens += doc.tokens.size();
    r.gold_pairs += doc.gold_pairs.size();
    for (const Token& t : doc.tokens) {
      if (t.is_abbrev) ++r.abbreviations;
    }
  }
  r.abbrev_ratio =
      r.tokens == 0 ? 0.0
                    : static_cast<double>(r.abbreviations) / static_cast<double>(r.tokens);
  return r;
}

json corpus_manifest(const Corpus& corpus) {
  const StatsReport s = corpus_stats(corpus);
  return {{"documents", s.documents},
          {"tokens", s.tokens},
          {"abbreviations", s.abbreviations},
          {"gold_pairs", s.gold_pairs}};
}

}  // namespace abbrev
