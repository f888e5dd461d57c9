#include "abbrev/rng.hpp"

#include <algorithm>

namespace abbrev {

std::vector<int> Rng::sample_indices(int n, int k) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  shuffle(all);
  all.resize(static_cast<std::size_t>(k));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace abbrev
