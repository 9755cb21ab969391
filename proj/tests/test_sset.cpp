#include <catch_amalgamated.hpp>

#include <cosimplex/sset.hpp>

using namespace cosimplex;

TEST_CASE("standard simplex counts", "[sset]") {
  auto d1 = standard_simplex(1, 1);
  CHECK(d1.count(0) == 2);
  CHECK(d1.count(1) == 3);
  CHECK(standard_simplex(2, 2).count(2) == 10);
  for (int k = 0; k <= 3; ++k)
    for (int cap = 0; cap <= 3; ++cap) {
      auto d = standard_simplex(k, cap);
      d.validate();
      for (int m = 0; m <= cap; ++m) {
        CHECK(d.count(m) == count_monotone(m, k));
        CHECK(d.nondegenerate_count(m) == binomial(k + 1, m + 1));
      }
    }
}

TEST_CASE("product counts", "[sset]") {
  auto sq = product(standard_simplex(1, 2), standard_simplex(1, 2));
  sq.validate();
  CHECK(sq.count(0) == 4);
  CHECK(sq.count(1) == 9);
  CHECK(sq.nondegenerate_count(2) == 2);
  CHECK(sq.nondegenerate_count(1) == 5);
  auto prism = product(standard_simplex(1, 3), standard_simplex(2, 3));
  prism.validate();
  CHECK(prism.nondegenerate_count(3) == 3);
  CHECK(prism.nondegenerate_count(4 - 1) == 3);
}

TEST_CASE("product projections are simplicial", "[sset]") {
  auto a = standard_simplex(1, 2), b = boundary(2, 2);
  auto p = product(a, b);
  CHECK(is_simplicial_map(p, a, projection_first(a, b)));
  CHECK(is_simplicial_map(p, b, projection_second(a, b)));
}

TEST_CASE("boundary and horn", "[sset]") {
  auto b = boundary(2, 2);
  b.validate();
  CHECK(b.nondegenerate_counts() == std::vector<std::size_t>{3, 3, 0});
  auto h = horn(2, 0, 2);
  h.validate();
  CHECK(h.nondegenerate_counts() == std::vector<std::size_t>{3, 2, 0});
  SSetMap inc;
  auto b1 = boundary(1, 1, &inc);
  CHECK(b1.count(0) == 2);
  CHECK(b1.count(1) == 2);
  CHECK(is_simplicial_map(b1, standard_simplex(1, 1), inc));
}

TEST_CASE("operator action agrees with faces and degeneracies", "[sset]") {
  auto d = standard_simplex(3, 3);
  for (int k = 0; k <= 3; ++k)
    for (int x = 0; x < static_cast<int>(d.count(k)); ++x) {
      auto sx = enumerate_monotone(k, 3)[x];
      for (int m = 0; m <= 3; ++m)
        for (auto& theta : enumerate_monotone(m, k))
          CHECK(d.act(theta, x) == static_cast<int>(monotone_rank(compose(sx, theta))));
    }
}

TEST_CASE("zero skeleton", "[sset]") {
  auto z = zero_skeleton(standard_simplex(1, 2));
  z.validate();
  CHECK(z.count(0) == 2);
  CHECK(z.count(1) == 2);
  CHECK(z.count(2) == 2);
}

TEST_CASE("validate names the violated identity", "[sset]") {
  auto d = standard_simplex(1, 2);
  std::swap(d.face_table(1, 0)[0], d.face_table(1, 0)[1]);
  try {
    d.validate();
    FAIL("expected a simplicial identity error");
  } catch (const SimplicialIdentityError& e) {
    CHECK(std::string(e.what()).find("d_") != std::string::npos);
  }
}

TEST_CASE("collapse subobject gives a circle", "[sset]") {
  SSetMap inc;
  boundary(1, 2, &inc);
  auto circle = collapse_subobject(standard_simplex(1, 2), inc);
  circle.validate();
  CHECK(circle.nondegenerate_counts() == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("coproduct", "[sset]") {
  auto c = coproduct(standard_simplex(1, 2), point(2));
  c.validate();
  CHECK(c.count(0) == 3);
}
