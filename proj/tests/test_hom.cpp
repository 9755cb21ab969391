#include <catch_amalgamated.hpp>

#include <cosimplex/hom.hpp>

using namespace cosimplex;

namespace {

// Oracle: try every vertex map and extend along nondegenerate simplices by brute force.
std::size_t brute_count(const TruncSSet& a, const TruncSSet& b) {
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  for (int m = 0; m <= a.cap(); ++m)
    for (std::size_t x = 0; x < a.count(m); ++x) {
      sizes.push_back(b.count(m));
      total *= b.count(m);
      if (total > 5'000'000) return static_cast<std::size_t>(-1);
    }
  std::size_t hits = 0;
  std::vector<std::size_t> digits(sizes.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t r = t;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      digits[i] = r % sizes[i];
      r /= sizes[i];
    }
    SSetMap f;
    std::size_t pos = 0;
    for (int m = 0; m <= a.cap(); ++m) {
      f.at.emplace_back();
      for (std::size_t x = 0; x < a.count(m); ++x) f.at[m].push_back(static_cast<int>(digits[pos++]));
    }
    if (is_simplicial_map(a, b, f)) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("Yoneda: maps out of a standard simplex are simplices", "[hom]") {
  std::vector<TruncSSet> targets = {standard_simplex(1, 2), boundary(2, 2), product(standard_simplex(1, 2), standard_simplex(1, 2)),
                                    discrete(3, 2), horn(2, 1, 2)};
  for (auto& x : targets)
    for (int k = 0; k <= 2; ++k) {
      auto maps = enumerate_maps(standard_simplex(k, 2), x);
      CHECK(maps.size() == x.count(k));
      for (auto& f : maps) CHECK(is_simplicial_map(standard_simplex(k, 2), x, f));
    }
}

TEST_CASE("monotone maps [1] -> [1]", "[hom]") {
  CHECK(count_maps(standard_simplex(1, 1), standard_simplex(1, 1)) == 3);
}

TEST_CASE("hom search agrees with brute force", "[hom]") {
  std::vector<TruncSSet> small = {point(1), discrete(2, 1), standard_simplex(1, 1), boundary(2, 1)};
  for (auto& a : small)
    for (auto& b : small) {
      auto brute = brute_count(a, b);
      if (brute == static_cast<std::size_t>(-1)) continue;
      CHECK(count_maps(a, b) == brute);
    }
}

TEST_CASE("pinned values restrict the search", "[hom]") {
  auto a = standard_simplex(1, 1), b = standard_simplex(1, 1);
  auto sa = sset_algebra(a), sb = sset_algebra(b);
  HomSearch s(sa, sb);
  REQUIRE(s.fix(0, 0, 1));
  CHECK(s.count() == 1);
}
