#include "abbrev/rng.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

using namespace abbrev;

TEST_CASE("same seed reproduces the same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next_u64() == b.next_u64()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("below stays in range and hits every value") {
  Rng rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = rng.below(5);
    CHECK(v < 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("real01 lies in [0, 1)") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.real01();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("streams are independent of draws on the parent") {
  Rng a(5);
  Rng s1 = a.stream(3);
  a.next_u64();  // advancing the parent must not shift derived streams
  Rng b(5);
  Rng s2 = b.stream(3);
  for (int i = 0; i < 20; ++i) CHECK(s1.next_u64() == s2.next_u64());
}

TEST_CASE("distinct stream ids give distinct streams") {
  Rng a(5);
  Rng s1 = a.stream(0);
  Rng s2 = a.stream(1);
  int same = 0;
  for (int i = 0; i < 64; ++i) {
    if (s1.next_u64() == s2.next_u64()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("shuffle permutes without losing elements") {
  Rng rng(11);
  std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> shuffled = v;
  rng.shuffle(shuffled);
  std::vector<int> sorted = shuffled;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == v);
}

TEST_CASE("sample_indices draws k distinct ascending indices") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<int> s = rng.sample_indices(10, 4);
    REQUIRE(s.size() == 4);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i] >= 0);
      CHECK(s[i] < 10);
      if (i > 0) CHECK(s[i] > s[i - 1]);
    }
  }
  CHECK(rng.sample_indices(4, 4) == std::vector<int>{0, 1, 2, 3});
}
