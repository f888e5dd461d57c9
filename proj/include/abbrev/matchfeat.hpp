#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "abbrev/candgen.hpp"
#include "abbrev/corpus.hpp"

namespace abbrev {

// The five features describing one (abbreviation, candidate-definition) pair.
struct PairFeatures {
  int distance = 0;              // min token distance to either span end
  int first_letter_matches = 0;  // in-order matches against token initials
  bool paren_flag = false;       // abbreviation or whole span parenthesized
  double semantic_sim = 0.0;     // cosine of abbrev vs mean span embedding
  int lcs_len = 0;               // longest common subsequence length
};

inline constexpr std::array<const char*, 5> kPairFeatureNames = {
    "distance", "first_letter_matches", "paren_flag", "semantic_sim", "lcs_len"};
inline constexpr int kPairVectorDim = 5;

// Deterministic token-to-vector mapping.  Implementations must be read-only
// after construction so they can be shared across threads.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual int dim() const = 0;
  virtual std::vector<double> embed(const std::string& text) const = 0;
};

// Default provider: counts character n-grams (n = 1..3) of the lowercased
// text into `dim` buckets via FNV-1a 64-bit hashing, then L2-normalizes.
class HashNgramEmbedder : public EmbeddingProvider {
 public:
  explicit HashNgramEmbedder(int dim = 256);
  int dim() const override { return dim_; }
  std::vector<double> embed(const std::string& text) const override;

 private:
  int dim_;
};

// Provider backed by a precomputed table file (one `token<TAB>v1 v2 ...`
// record per line).  Unknown tokens embed to the zero vector and are counted.
class TableEmbedder : public EmbeddingProvider {
 public:
  static TableEmbedder load(const std::string& path);

  int dim() const override { return dim_; }
  std::vector<double> embed(const std::string& text) const override;
  std::size_t missing_count() const { return missing_.load(); }

  TableEmbedder(TableEmbedder&& other) noexcept;
  TableEmbedder& operator=(TableEmbedder&&) = delete;

 private:
  TableEmbedder() = default;

  std::unordered_map<std::string, std::vector<double>> table_;
  int dim_ = 0;
  mutable std::atomic<std::size_t> missing_{0};
};

// theta = min(|a - start|, |a - end|); the span must not contain a.
int pair_distance(int a, int start, int end);

// Greedy in-order alignment of abbreviation characters against the first
// characters of the span tokens (case-folded): walk both sequences left to
// right, consuming an abbreviation character on every comparison and a token
// only on a match.
int first_letter_matches(const std::string& abbrev, std::span<const Token> span);

// True when the abbreviation token is parenthesized or the whole span is.
bool paren_flag(const Document& doc, int a, int start, int end);

// H = cosine(E(abbrev), mean of E(token) over the span); 0 when either side
// embeds to the zero vector.
double semantic_similarity(const std::string& abbrev, std::span<const Token> span,
                           const EmbeddingProvider& provider);

// Classic DP longest common subsequence over code points, no case folding.
int lcs_length(const std::string& a, const std::string& b);
// LCS of the lowercased abbreviation vs the lowercased space-joined span.
int lcs_length(const std::string& abbrev, std::span<const Token> span);

PairFeatures extract_pair_features(const Document& doc, const CandidateDefinition& cand,
                                   const EmbeddingProvider& provider);
std::vector<double> vectorize_pair(const PairFeatures& f);

}  // namespace abbrev
