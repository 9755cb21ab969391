#include <catch_amalgamated.hpp>

#include <cosimplex/categories.hpp>
#include <cosimplex/kan.hpp>

using namespace cosimplex;

namespace {

// Brute force over all tuples of (n-1)-simplices.
bool naive_kan(const TruncSSet& x, int check_dim) {
  for (int n = 1; n <= check_dim; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<int> t(n + 1, 0);
      const int c = static_cast<int>(x.count(n - 1));
      while (true) {
        bool horn = true;
        for (int i = 0; i <= n && horn; ++i)
          for (int j = i + 1; j <= n && horn; ++j)
            if (i != k && j != k && n >= 2 && x.face(n - 1, i, t[j]) != x.face(n - 1, j - 1, t[i])) horn = false;
        if (horn) {
          bool filled = false;
          for (std::size_t y = 0; y < x.count(n) && !filled; ++y) {
            bool ok = true;
            for (int j = 0; j <= n; ++j)
              if (j != k && x.face(n, j, static_cast<int>(y)) != t[j]) ok = false;
            filled = ok;
          }
          if (!filled) return false;
        }
        int p = 0;
        while (p <= n && (p == k || ++t[p] == c)) {
          if (p != k) t[p] = 0;
          ++p;
        }
        if (p > n) break;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("standard simplices are not Kan", "[kan]") {
  auto v = kan_complex_check(standard_simplex(1, 2), 2);
  CHECK_FALSE(v.passed);
  REQUIRE(v.failure);
  CHECK(v.failure->dim == 2);
  CHECK(v.failure->describe().find("no filler") != std::string::npos);
}

TEST_CASE("kan complexes pass", "[kan]") {
  CHECK(kan_complex_check(point(3), 3).passed);
  CHECK(kan_complex_check(discrete(3, 3), 3).passed);
  CHECK(kan_complex_check(zero_skeleton(standard_simplex(1, 2)), 2).passed);
  auto g = nerve(FinCat::from_preorder(2, [](int, int) { return true; }), 3).sset;
  CHECK(kan_complex_check(g, 3).passed);
}

TEST_CASE("identity is a fibration", "[kan]") {
  auto x = standard_simplex(2, 2);
  CHECK(kan_fibration_check(x, x, identity_map(x), 2).passed);
  CHECK(kan_fibration_check(x, x, identity_map(x), 0).passed);
}

TEST_CASE("horn search agrees with brute force", "[kan]") {
  std::vector<TruncSSet> xs{standard_simplex(1, 2), standard_simplex(2, 2), boundary(2, 2), horn(2, 1, 2),
                            nerve(FinCat::from_preorder(2, [](int, int) { return true; }), 2).sset,
                            product(standard_simplex(1, 2), standard_simplex(1, 2)), discrete(2, 2)};
  SSetMap inc;
  boundary(1, 2, &inc);
  xs.push_back(collapse_subobject(standard_simplex(1, 2), inc));
  for (auto& x : xs) CHECK(kan_complex_check(x, 2).passed == naive_kan(x, 2));
}

TEST_CASE("check_dim above the cap is rejected", "[kan]") {
  CHECK_THROWS(kan_complex_check(point(1), 2));
}
