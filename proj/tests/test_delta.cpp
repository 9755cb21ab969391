#include <catch_amalgamated.hpp>

#include <cosimplex/delta.hpp>

using namespace cosimplex;

namespace {

MonotoneMap mm(int cod, std::vector<int> v) { return MonotoneMap(cod, std::move(v)); }

// Brute-force oracle: all nondecreasing sequences, filtered.
std::vector<MonotoneMap> brute_maps(int m, int n, bool epi_only) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(m + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > m) {
      MonotoneMap f(n, v);
      if (!epi_only || f.is_epi()) out.push_back(f);
      return;
    }
    for (int x = lo; x <= n; ++x) {
      v[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("compose on small maps", "[delta]") {
  CHECK(compose(mm(1, {0, 1}), mm(1, {0, 0})) == mm(1, {0, 0}));
  auto f = mm(3, {0, 2, 2, 3});
  CHECK(compose(MonotoneMap::identity(3), f) == f);
  CHECK(compose(mm(1, {0, 0, 1}), mm(2, {0, 2, 2})) == mm(1, {0, 1, 1}));
}

TEST_CASE("compose rejects mismatched degrees", "[delta]") {
  CHECK_THROWS_AS(compose(mm(1, {0, 1}), mm(2, {0, 2})), CompositionError);
}

TEST_CASE("constructor rejects non-monotone images", "[delta]") {
  CHECK_THROWS(mm(2, {1, 0}));
  CHECK_THROWS(mm(1, {0, 2}));
}

TEST_CASE("epi-mono factorization", "[delta]") {
  auto [e, m] = epi_mono_factor(mm(1, {0, 0}));
  CHECK(e == mm(0, {0, 0}));
  CHECK(m == mm(1, {0}));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (auto& f : enumerate_monotone(a, b)) {
        auto fac = epi_mono_factor(f);
        CHECK(fac.epi.is_epi());
        CHECK(fac.mono.is_mono());
        CHECK(compose(fac.mono, fac.epi) == f);
      }
}

TEST_CASE("epi enumeration matches brute force", "[delta]") {
  CHECK(enumerate_epis(1, 0).size() == 1);
  CHECK(enumerate_epis(2, 1) == std::vector<MonotoneMap>{mm(1, {0, 0, 1}), mm(1, {0, 1, 1})});
  CHECK(enumerate_epis(3, 1).size() == 3);
  CHECK(enumerate_epis(1, 2).empty());
  for (int k = 0; k <= 5; ++k)
    for (int p = 0; p <= 5; ++p) {
      auto fast = enumerate_epis(k, p);
      auto slow = brute_maps(k, p, true);
      std::sort(slow.begin(), slow.end());
      CHECK(fast == slow);
      CHECK(fast.size() == binomial(k, k - p));
    }
}

TEST_CASE("collapse sets encode epis", "[delta]") {
  for (int k = 0; k <= 5; ++k)
    for (int p = 0; p <= k; ++p)
      for (auto& e : enumerate_epis(k, p)) {
        auto u = collapse_set(e);
        CHECK(static_cast<int>(u.size()) == k - p);
        CHECK(epi_from_collapse(k, u) == e);
      }
}

TEST_CASE("monotone enumeration and rank", "[delta]") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto all = enumerate_monotone(m, n);
      CHECK(all == brute_maps(m, n, false));
      CHECK(all.size() == count_monotone(m, n));
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(monotone_rank(all[i]) == i);
    }
}

TEST_CASE("composition is associative and unital", "[delta][property]") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (auto& f : enumerate_monotone(a, b))
          for (auto& g : enumerate_monotone(b, c)) {
            CHECK(compose(MonotoneMap::identity(c), g) == g);
            CHECK(compose(g, MonotoneMap::identity(b)) == g);
            for (auto& h : enumerate_monotone(c, 2)) CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
          }
}

TEST_CASE("cofaces and codegeneracies satisfy the cosimplicial identities", "[delta][property]") {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(MonotoneMap::coface(n + 1, j), MonotoneMap::coface(n, i)) ==
              compose(MonotoneMap::coface(n + 1, i), MonotoneMap::coface(n, j - 1)));
  for (int n = 0; n <= 3; ++n)
    for (int j = 0; j <= n; ++j) {
      CHECK(compose(MonotoneMap::codegeneracy(n, j), MonotoneMap::coface(n + 1, j)).is_identity());
      CHECK(compose(MonotoneMap::codegeneracy(n, j), MonotoneMap::coface(n + 1, j + 1)).is_identity());
    }
}

TEST_CASE("diagonal embedding is a functor", "[delta]") {
  auto f = mm(2, {0, 2});
  auto g = mm(1, {0, 0, 1});
  CHECK(compose(diagonal_embed(g, 3), diagonal_embed(f, 3)) == diagonal_embed(compose(g, f), 3));
  CHECK(diagonal_embed(MonotoneMap::identity(2), 2).is_identity());
}
