#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "abbrev/corpus.hpp"

namespace abbrev {

// Lowercased exact-match word list; no stemming.
struct Dictionary {
  std::unordered_set<std::string> entries;
};

struct TokenizerConfig {
  std::unordered_set<std::string> stopwords;  // lowercase
  std::unordered_set<char32_t> vowels;
  bool dot_splits_sentences = true;
  bool strip_parens = true;

  static TokenizerConfig defaults();
  bool is_vowel(char32_t lowered) const { return vowels.count(lowered) > 0; }
};

// Splits on whitespace and sentence-final dots (a dot splits only when
// followed by whitespace or end of text, so "т.д" stays one token). Round
// parentheses are token boundaries: stripped from token text, recorded as
// paren_depth. Stopwords are dropped; a sentence-final dot closes the
// sentence only if it has emitted at least one kept token.
std::vector<Token> tokenize(std::string_view raw, const TokenizerConfig& cfg);

// One lowercase word per line, deduplicated.
Dictionary load_dictionary(const std::string& path);
Dictionary dictionary_from_words(const std::vector<std::string>& words);

bool in_dictionary(const Dictionary& dict, const Token& token);

// Same file format as the dictionary.
std::unordered_set<std::string> load_stopwords(const std::string& path);

}  // namespace abbrev
