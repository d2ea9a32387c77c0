#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "pathsample/random.hpp"

using pathsample::RandomSource;

TEST_CASE("identical seed and stream reproduce the sequence exactly") {
  RandomSource a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("distinct streams from one seed differ") {
  RandomSource a(7, 0), b(7, 1), c(7, 2);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next();
    same_ab += (x == b.next());
    same_ac += (x == c.next());
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("bounded draws stay in range and hit every value") {
  RandomSource rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.bounded(7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
  CHECK(rng.bounded(1) == 0);
}

TEST_CASE("uniform doubles live in [0,1)") {
  RandomSource rng(3);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("bounded(n) is unbiased enough for a chi-squared smoke test") {
  RandomSource rng(12345);
  const int n = 10;
  const int draws = 200000;
  std::vector<int> counts(n, 0);
  for (int i = 0; i < draws; ++i) ++counts[rng.bounded(n)];
  double stat = 0.0;
  const double expect = (double)draws / n;
  for (int c : counts) stat += (c - expect) * (c - expect) / expect;
  // chi-squared upper critical value, 9 degrees of freedom, p = 0.001
  CHECK(stat < 27.877);
}

TEST_CASE("derived seeds are distinct across indices") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i)
    seeds.insert(RandomSource::derive_seed(99, i));
  CHECK(seeds.size() == 1000);
}
