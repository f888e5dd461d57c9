#include "abbrev/matchfeat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "abbrev/utf8.hpp"

namespace abbrev {

namespace {

std::uint64_t fnv1a(const char* data, std::size_t len) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (std::size_t i = 0; i < len; ++i) {
    hash ^= static_cast<unsigned char>(data[i]);
    hash *= 1099511628211ULL;
  }
  return hash;
}

double l2_norm(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x * x;
  return std::sqrt(total);
}

}  // namespace

HashNgramEmbedder::HashNgramEmbedder(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("embedding dimension must be >= 1");
}

std::vector<double> HashNgramEmbedder::embed(const std::string& text) const {
  std::vector<double> v(dim_, 0.0);
  const std::vector<char32_t> cps = utf8::decode(utf8::lower_copy(text));
  std::string gram;
  for (std::size_t start = 0; start < cps.size(); ++start) {
    gram.clear();
    for (std::size_t n = 1; n <= 3 && start + n <= cps.size(); ++n) {
      utf8::append(gram, cps[start + n - 1]);
      const std::uint64_t h = fnv1a(gram.data(), gram.size());
      v[static_cast<std::size_t>(h % static_cast<std::uint64_t>(dim_))] += 1.0;
    }
  }
  const double norm = l2_norm(v);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return v;
}

TableEmbedder::TableEmbedder(TableEmbedder&& other) noexcept
    : table_(std::move(other.table_)),
      dim_(other.dim_),
      missing_(other.missing_.load()) {}

TableEmbedder TableEmbedder::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embedding table: " + path);
  TableEmbedder result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("embedding table " + path + " line " +
                               std::to_string(line_no) + ": missing tab separator");
    }
    std::string token = line.substr(0, tab);
    std::istringstream values(line.substr(tab + 1));
    std::vector<double> vec;
    double x = 0.0;
    while (values >> x) vec.push_back(x);
    if (vec.empty()) {
      throw std::runtime_error("embedding table " + path + " line " +
                               std::to_string(line_no) + ": no vector components");
    }
    if (result.dim_ == 0) {
      result.dim_ = static_cast<int>(vec.size());
    } else if (static_cast<int>(vec.size()) != result.dim_) {
      throw std::runtime_error("embedding table " + path + " line " +
                               std::to_string(line_no) + ": dimension mismatch");
    }
    result.table_[std::move(token)] = std::move(vec);
  }
  if (result.dim_ == 0) {
    throw std::runtime_error("embedding table " + path + " is empty");
  }
  return result;
}

std::vector<double> TableEmbedder::embed(const std::string& text) const {
  const auto it = table_.find(text);
  if (it != table_.end()) return it->second;
  missing_.fetch_add(1);
  return std::vector<double>(dim_, 0.0);
}

int pair_distance(int a, int start, int end) {
  if (start > end) throw std::invalid_argument("span start must be <= end");
  if (start <= a && a <= end) {
    throw std::invalid_argument("candidate span must not contain the abbreviation");
  }
  return std::min(std::abs(a - start), std::abs(a - end));
}

int first_letter_matches(const std::string& abbrev, std::span<const Token> span) {
  if (span.empty()) throw std::invalid_argument("candidate span must be non-empty");
  const std::vector<char32_t> a_cps = utf8::decode(utf8::lower_copy(abbrev));
  std::vector<char32_t> initials;
  initials.reserve(span.size());
  for (const Token& t : span) {
    const std::vector<char32_t> cps = utf8::decode(t.text);
    initials.push_back(cps.empty() ? U'\0' : utf8::to_lower(cps.front()));
  }
  int matches = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a_cps.size() && j < initials.size(); ++i) {
    if (a_cps[i] == initials[j]) {
      ++matches;
      ++j;
    }
  }
  return matches;
}

bool paren_flag(const Document& doc, int a, int start, int end) {
  const int n = static_cast<int>(doc.tokens.size());
  if (a < 0 || a >= n || start < 0 || end >= n || start > end) {
    throw std::invalid_argument("paren_flag indices out of range");
  }
  if (doc.tokens[a].paren_depth > 0) return true;
  for (int i = start; i <= end; ++i) {
    if (doc.tokens[i].paren_depth <= 0) return false;
  }
  return true;
}

double semantic_similarity(const std::string& abbrev, std::span<const Token> span,
                           const EmbeddingProvider& provider) {
  if (span.empty()) throw std::invalid_argument("candidate span must be non-empty");
  if (abbrev.empty()) throw std::invalid_argument("abbreviation must be non-empty");
  const int dim = provider.dim();
  const auto checked_embed = [&](const std::string& text) {
    std::vector<double> v = provider.embed(text);
    if (static_cast<int>(v.size()) != dim) {
      throw std::runtime_error("embedding provider returned a vector of wrong dimension");
    }
    return v;
  };

  std::vector<double> mean(dim, 0.0);
  for (const Token& t : span) {
    const std::vector<double> v = checked_embed(t.text);
    for (int k = 0; k < dim; ++k) mean[k] += v[k];
  }
  for (double& x : mean) x /= static_cast<double>(span.size());

  const std::vector<double> a = checked_embed(abbrev);
  const double na = l2_norm(a);
  const double nm = l2_norm(mean);
  if (na <= 0.0 || nm <= 0.0) return 0.0;
  double dot = 0.0;
  for (int k = 0; k < dim; ++k) dot += a[k] * mean[k];
  return dot / (na * nm);
}

int lcs_length(const std::string& a, const std::string& b) {
  const std::vector<char32_t> s = utf8::decode(a);
  const std::vector<char32_t> t = utf8::decode(b);
  if (s.empty() || t.empty()) return 0;
  std::vector<int> prev(t.size() + 1, 0), row(t.size() + 1, 0);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    for (std::size_t j = 1; j <= t.size(); ++j) {
      row[j] = s[i - 1] == t[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
    }
    std::swap(prev, row);
  }
  return prev[t.size()];
}

int lcs_length(const std::string& abbrev, std::span<const Token> span) {
  std::string joined;
  for (std::size_t i = 0; i < span.size(); ++i) {
    if (i > 0) joined += ' ';
    joined += span[i].text;
  }
  return lcs_length(utf8::lower_copy(abbrev), utf8::lower_copy(joined));
}

PairFeatures extract_pair_features(const Document& doc, const CandidateDefinition& cand,
                                   const EmbeddingProvider& provider) {
  const int n = static_cast<int>(doc.tokens.size());
  if (cand.abbrev_index < 0 || cand.abbrev_index >= n || cand.start < 0 ||
      cand.end >= n || cand.start > cand.end) {
    throw std::invalid_argument("candidate indices out of range");
  }
  const std::string& abbrev = doc.tokens[cand.abbrev_index].text;
  const std::span<const Token> span(doc.tokens.data() + cand.start,
                                    static_cast<std::size_t>(cand.end - cand.start + 1));
  PairFeatures f;
  f.distance = pair_distance(cand.abbrev_index, cand.start, cand.end);
  f.first_letter_matches = first_letter_matches(abbrev, span);
  f.paren_flag = paren_flag(doc, cand.abbrev_index, cand.start, cand.end);
  f.semantic_sim = semantic_similarity(abbrev, span, provider);
  f.lcs_len = lcs_length(abbrev, span);
  return f;
}

std::vector<double> vectorize_pair(const PairFeatures& f) {
  return {static_cast<double>(f.distance), static_cast<double>(f.first_letter_matches),
          f.paren_flag ? 1.0 : 0.0, f.semantic_sim, static_cast<double>(f.lcs_len)};
}

}  // namespace abbrev
