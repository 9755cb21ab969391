#include <catch_amalgamated.hpp>

#include <cosimplex/homology.hpp>
#include <cosimplex/kan_extension.hpp>

using namespace cosimplex;

TEST_CASE("Kan extension of the standard simplex", "[kan_extension]") {
  CHECK(check_kan_extension_identity(1, 2, 2).passed);
  CHECK(check_kan_extension_identity(2, 2, 2).passed);
  CHECK(check_kan_extension_identity(2, 1, 1).passed);
}

TEST_CASE("Kan extension at the cube needs the skeleton", "[kan_extension]") {
  // With the simplicial cap above the truncation the extension only sees the N-skeleton.
  auto v = check_kan_extension_identity(2, 1, 2);
  CHECK_FALSE(v.passed);
  auto ke = left_kan_extend(standard_multi(1, 1, 2), 2);
  auto sk = skeleton(product(standard_simplex(1, 2), standard_simplex(1, 2)), 1);
  CHECK(ke.value.value({1, 1}).nondegenerate_counts() == sk.nondegenerate_counts());
}

TEST_CASE("Kan extension of the degreewise zero skeleton", "[kan_extension]") {
  auto x = zero_skeleton(standard_multi(1, 2, 2));
  auto lx = left_kan_extend(x, 2).value;
  CHECK_NOTHROW(lx.validate());
  CHECK(path_components(lx.value({1, 1})).count == 4);
  for (std::size_t o = 0; o < lx.num_objects(); ++o) CHECK(lx.value(static_cast<int>(o)).nondegenerate_count(1) == 0);
}

TEST_CASE("unit is the diagonal", "[kan_extension]") {
  auto a = unit_alpha(1, 2, 2);
  auto sq = product(standard_simplex(1, 2), standard_simplex(1, 2));
  CHECK(is_simplicial_map(standard_simplex(1, 2), sq, a));
  // nondegenerate edge id_[1] has rank 1 among maps [1] -> [1]
  CHECK(a.at[1][1] == 1 * 3 + 1);
  auto alpha = unit_transformation(2, 2, 2);
  CHECK(naturality_defect(standard_multi(1, 2, 2), diagonal(standard_multi(2, 2, 2)), alpha).empty());
  CHECK(unit_alpha(0, 3, 2) == identity_map(point(2)));
}

TEST_CASE("adjunction bijection", "[kan_extension]") {
  auto pt = constant_multi(point(2), 2, 2);
  auto v = adjunction_bijection(pt);
  CHECK(v.passed);
  CHECK(v.left == 1);
  auto s0 = adjunction_bijection(constant_multi(discrete(2, 2), 2, 2));
  CHECK(s0.passed);
  CHECK(s0.left == 2);
  auto d = adjunction_bijection(standard_multi(2, 2, 2));
  CHECK(d.passed);
  CHECK(d.left >= 1);
}
