#include "abbrev/textprep.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "abbrev/utf8.hpp"

namespace abbrev {

TokenizerConfig TokenizerConfig::defaults() {
  TokenizerConfig cfg;
  cfg.vowels = {U'а', U'е', U'ё', U'и', U'о', U'у', U'ы', U'э', U'ю', U'я',
                U'a', U'e', U'i', U'o', U'u', U'y'};
  return cfg;
}

std::vector<Token> tokenize(std::string_view raw, const TokenizerConfig& cfg) {
  const std::vector<char32_t> cps = utf8::decode(raw);
  std::vector<Token> out;

  std::vector<char32_t> current;
  int current_depth = 0;
  int depth = 0;
  int sent = 0;
  int kept_in_sentence = 0;

  const auto flush = [&]() {
    if (current.empty()) return;
    std::string text = utf8::encode(current);
    current.clear();
    const std::string lower = utf8::lower_copy(text);
    if (cfg.stopwords.count(lower) > 0) return;
    Token t;
    t.text = std::move(text);
    t.paren_depth = current_depth;
    t.sent_id = sent;
    out.push_back(std::move(t));
    ++kept_in_sentence;
  };

  const auto close_sentence = [&]() {
    if (kept_in_sentence > 0) {
      ++sent;
      kept_in_sentence = 0;
    }
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (utf8::is_whitespace(cp)) {
      flush();
      continue;
    }
    if (cfg.strip_parens && cp == U'(') {
      flush();
      ++depth;
      continue;
    }
    if (cfg.strip_parens && cp == U')') {
      flush();
      depth = std::max(0, depth - 1);
      continue;
    }
    if (cp == U'.' && cfg.dot_splits_sentences) {
      const bool at_end = i + 1 == cps.size();
      if (at_end || utf8::is_whitespace(cps[i + 1])) {
        flush();
        close_sentence();
        continue;
      }
    }
    if (current.empty()) current_depth = depth;
    current.push_back(cp);
  }
  flush();
  return out;
}

Dictionary load_dictionary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dictionary file: " + path);
  Dictionary dict;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    dict.entries.insert(utf8::lower_copy(line));
  }
  return dict;
}

Dictionary dictionary_from_words(const std::vector<std::string>& words) {
  Dictionary dict;
  for (const auto& w : words) dict.entries.insert(utf8::lower_copy(w));
  return dict;
}

bool in_dictionary(const Dictionary& dict, const Token& token) {
  return dict.entries.count(utf8::lower_copy(token.text)) > 0;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  return load_dictionary(path).entries;
}

}  // namespace abbrev
