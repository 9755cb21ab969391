#include <catch_amalgamated.hpp>

#include <cosimplex/categories.hpp>
#include <cosimplex/homology.hpp>

using namespace cosimplex;

TEST_CASE("betti numbers of small spaces", "[homology]") {
  auto b = betti(boundary(2, 2));
  CHECK(b.reduced == std::vector<long>{0, 1});
  CHECK(betti(discrete(2, 2)).reduced == std::vector<long>{1, 0});
  for (int k = 0; k <= 3; ++k) CHECK(betti(standard_simplex(k, 3)).acyclic());
  auto s2 = betti(boundary(3, 3));
  CHECK(s2.reduced == std::vector<long>{0, 0, 1});
  CHECK(betti(empty_sset(2)).empty);
}

TEST_CASE("circle from collapsing an edge boundary", "[homology]") {
  SSetMap inc;
  boundary(1, 2, &inc);
  auto c = collapse_subobject(standard_simplex(1, 2), inc);
  CHECK(betti(c).reduced == std::vector<long>{0, 1});
}

TEST_CASE("products of simplices are acyclic", "[homology]") {
  auto p = product(standard_simplex(1, 3), standard_simplex(2, 3));
  CHECK(betti(p).acyclic());
  auto t = product(boundary(2, 2), boundary(2, 2));
  CHECK(betti(t).reduced == std::vector<long>{0, 2});
}

TEST_CASE("path components of zero skeleta", "[homology]") {
  CHECK(path_components(zero_skeleton(standard_simplex(1, 2))).count == 2);
  CHECK(path_components(zero_skeleton(product(standard_simplex(1, 2), standard_simplex(1, 2)))).count == 4);
  CHECK(path_components(standard_simplex(2, 2)).count == 1);
  CHECK(path_components(point(0)).cap_limited);
}

TEST_CASE("rank falls back to big integers on overflow", "[homology]") {
  using detail::Column;
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<Column<std::int64_t>> cols{{{0, big + 1}, {1, big}}, {{0, big}, {1, big + 1}}, {{0, 3}, {1, 5}}};
  CHECK_THROWS_AS(detail::rank_columns<std::int64_t>(cols), detail::Overflow);
  using B = boost::multiprecision::cpp_int;
  std::vector<Column<B>> bc{{{0, B(big + 1)}, {1, B(big)}}, {{0, B(big)}, {1, B(big + 1)}}, {{0, B(3)}, {1, B(5)}}};
  CHECK(detail::rank_columns<B>(bc) == 2);
}
