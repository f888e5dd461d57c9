#include "abbrev/candgen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "abbrev/utf8.hpp"

namespace abbrev {

int max_definition_length(const std::string& abbrev) {
  const int len = static_cast<int>(utf8::length(abbrev));
  if (len < 1) throw std::invalid_argument("abbreviation must be non-empty");
  return std::min(len + 5, len * 2);
}

int window_radius(int len_max) {
  if (len_max < 1) throw std::invalid_argument("len_max must be >= 1");
  return std::min(len_max + 5, 2 * len_max);
}

namespace {

std::string fold(const std::string& s, bool case_fold) {
  return case_fold ? utf8::lower_copy(s) : s;
}

}  // namespace

bool passes_rules(const std::string& abbrev, std::span<const Token> span,
                  const CandidateRuleConfig& cfg) {
  if (span.empty()) throw std::invalid_argument("candidate span must be non-empty");
  const std::string a = fold(abbrev, cfg.case_fold);
  const std::vector<char32_t> a_cps = utf8::decode(a);
  if (a_cps.empty()) throw std::invalid_argument("abbreviation must be non-empty");

  std::vector<std::string> texts;
  texts.reserve(span.size());
  for (const Token& t : span) texts.push_back(fold(t.text, cfg.case_fold));

  // R1: first abbreviation character occurs somewhere in the first token.
  {
    const std::vector<char32_t> first = utf8::decode(texts.front());
    if (std::find(first.begin(), first.end(), a_cps.front()) == first.end()) return false;
  }

  // R2 + R3: cover abbreviation characters (with multiplicity) from the
  // multiset of span characters.
  std::unordered_map<char32_t, int> pool;
  for (const auto& text : texts) {
    for (char32_t cp : utf8::decode(text)) ++pool[cp];
  }
  int covered = 0;
  for (char32_t cp : a_cps) {
    auto it = pool.find(cp);
    if (it != pool.end() && it->second > 0) {
      --it->second;
      ++covered;
    }
  }
  const int len = static_cast<int>(a_cps.size());
  const int missing = len - covered;
  if (static_cast<double>(covered) / len < cfg.char_coverage_min) return false;
  if (missing > cfg.max_missing_chars) return false;

  // R4: the abbreviation may not appear verbatim inside the span.  Byte-level
  // search is safe: UTF-8 substring matches align with code points.
  std::string joined;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (texts[i].find(a) != std::string::npos) return false;
    if (i > 0) joined += ' ';
    joined += texts[i];
  }
  if (texts.size() > 1 && joined.find(a) != std::string::npos) return false;

  return true;
}

std::vector<CandidateDefinition> generate_candidates(const Document& doc, int abbrev_index,
                                                     const CandidateRuleConfig& cfg) {
  const int n = static_cast<int>(doc.tokens.size());
  if (abbrev_index < 0 || abbrev_index >= n) {
    throw std::invalid_argument("abbrev_index out of range");
  }
  const std::string& abbrev = doc.tokens[abbrev_index].text;
  const int len_max = max_definition_length(abbrev);
  const int delta = window_radius(len_max);
  const int sent = doc.tokens[abbrev_index].sent_id;

  std::vector<CandidateDefinition> out;
  const auto try_window = [&](int lo, int hi, CandidateDefinition::Side side) {
    lo = std::max(lo, 0);
    hi = std::min(hi, n - 1);
    const auto same_sentence = [&](int start, int end) {
      for (int i = start; i <= end; ++i) {
        if (doc.tokens[i].sent_id != sent) return false;
      }
      return true;
    };
    for (int start = lo; start <= hi; ++start) {
      const int last = std::min(hi, start + len_max - 1);
      for (int end = start; end <= last; ++end) {
        if (cfg.sentence_bound && !same_sentence(start, end)) continue;
        const std::span<const Token> span(doc.tokens.data() + start,
                                          static_cast<std::size_t>(end - start + 1));
        if (!passes_rules(abbrev, span, cfg)) continue;
        out.push_back({abbrev_index, start, end, side});
      }
    }
  };

  try_window(abbrev_index - delta, abbrev_index - 1, CandidateDefinition::Side::left);
  try_window(abbrev_index + 1, abbrev_index + delta, CandidateDefinition::Side::right);
  return out;
}

}  // namespace abbrev
