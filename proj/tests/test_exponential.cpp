#include <catch_amalgamated.hpp>

#include <cosimplex/exponential.hpp>

using namespace cosimplex;

TEST_CASE("mapping out of a point recovers the target", "[exponential]") {
  auto x = boundary(2, 2);
  auto e = exponential(point(2), x);
  e.value.validate();
  for (int m = 0; m <= 2; ++m) CHECK(e.value.count(m) == x.count(m));
}

TEST_CASE("vertices of the exponential are maps", "[exponential]") {
  auto k = standard_simplex(1, 2), x = boundary(2, 2);
  auto e = exponential(k, x);
  e.value.validate();
  CHECK(e.value.count(0) == count_maps(k, x));
  CHECK(e.value.count(1) == count_maps(product(k, standard_simplex(1, 2)), x));
}

TEST_CASE("exponential functoriality", "[exponential]") {
  const int cap = 2;
  auto a = point(cap), b = standard_simplex(1, cap), x = standard_simplex(1, cap), y = point(cap);
  auto g = standard_simplex_map(MonotoneMap::coface(1, 0), cap);
  auto ebx = exponential(b, x), eax = exponential(a, x), eby = exponential(b, y);
  auto pre = exponential_precompose(ebx, eax, g);
  CHECK(is_simplicial_map(ebx.value, eax.value, pre));
  SSetMap h;
  for (int m = 0; m <= cap; ++m) h.at.emplace_back(x.count(m), 0);
  auto post = exponential_postcompose(ebx, eby, h);
  CHECK(is_simplicial_map(ebx.value, eby.value, post));
  for (int m = 0; m <= cap; ++m)
    for (int f : pre.at[m]) CHECK(f >= 0);
}
