#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abbrev/corpus.hpp"
#include "abbrev/ml.hpp"

namespace abbrev {

// Synthetic corpus generator: plants definition phrases followed by
// (usually parenthesized) abbreviations built from their initials, embedded
// in filler sentences, with controllable noise.
struct SynthConfig {
  std::uint64_t seed = 0;
  int target_tokens = 5000;
  double abbrev_ratio = 0.06;     // targeted fraction of abbreviation tokens
  int tokens_per_doc = 120;       // approximate document length
  double paren_prob = 0.9;        // abbreviation token sits inside parentheses
  double jitter_prob = 0.1;       // filler tokens between definition and abbreviation
  double missing_def_prob = 0.05; // abbreviation planted without a definition
  double decoy_prob = 0.05;       // numeric/measurement noise tokens
};

Corpus synth_corpus(const SynthConfig& cfg);

// The lowercase filler vocabulary; doubles as the synthetic dictionary.
const std::vector<std::string>& synth_vocabulary();

// Toy datasets for classifier sanity checks: two well-separated point clouds
// (linear margin), and jittered XOR corner clusters.
void make_separable_dataset(int n, std::uint64_t seed, ml::Matrix* x, ml::Labels* y);
void make_xor_dataset(int n, std::uint64_t seed, ml::Matrix* x, ml::Labels* y);

}  // namespace abbrev
