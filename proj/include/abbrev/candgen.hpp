#pragma once

#include <span>
#include <string>
#include <vector>

#include "abbrev/corpus.hpp"

namespace abbrev {

// A contiguous token span proposed as the definition of the abbreviation at
// abbrev_index.  Spans never cross the abbreviation's own index: a left
// candidate ends before it, a right candidate starts after it.
struct CandidateDefinition {
  int abbrev_index = 0;
  int start = 0;
  int end = 0;  // inclusive
  enum class Side { left, right };
  Side side = Side::left;

  friend bool operator==(const CandidateDefinition&, const CandidateDefinition&) = default;
};

struct CandidateRuleConfig {
  double char_coverage_min = 0.8;
  int max_missing_chars = 1;
  bool case_fold = true;
  // When set, candidate spans must lie in the same sentence as the
  // abbreviation token.  Off by default.
  bool sentence_bound = false;
};

// Longest allowed definition in tokens for an abbreviation of `len`
// characters: min(len + 5, len * 2).
int max_definition_length(const std::string& abbrev);

// Search-window radius around the abbreviation, in tokens:
// min(len_max + 5, 2 * len_max).
int window_radius(int len_max);

// The four pruning rules, all of which must hold (case-folded when
// cfg.case_fold):
//   R1  the abbreviation's first character occurs in the first span token;
//   R2  the fraction of abbreviation characters (with multiplicity) found in
//       the span's characters is >= char_coverage_min;
//   R3  at most max_missing_chars abbreviation characters are absent;
//   R4  the abbreviation is not a substring of any span token nor of the
//       space-joined span text.
bool passes_rules(const std::string& abbrev, std::span<const Token> span,
                  const CandidateRuleConfig& cfg);

// All spans of length 1..len_max inside the left window [a-delta, a-1] or the
// right window [a+1, a+delta] (clipped to the document) that pass the rules,
// ordered by (start, end).
std::vector<CandidateDefinition> generate_candidates(const Document& doc, int abbrev_index,
                                                     const CandidateRuleConfig& cfg);

}  // namespace abbrev
