#include <catch_amalgamated.hpp>

#include <random>

#include <cosimplex/categories.hpp>
#include <cosimplex/cosimplicial.hpp>
#include <cosimplex/homology.hpp>

using namespace cosimplex;

namespace {

std::vector<MultiMap> all_multimaps(int arity, int trunc) {
  std::vector<std::vector<int>> tuples{{}};
  for (int j = 0; j < arity; ++j) {
    std::vector<std::vector<int>> next;
    for (auto& t : tuples)
      for (int d = 0; d <= trunc; ++d) {
        auto e = t;
        e.push_back(d);
        next.push_back(e);
      }
    tuples = next;
  }
  std::vector<MultiMap> out;
  for (auto& a : tuples)
    for (auto& b : tuples)
      for (auto& m : enumerate_multimaps(a, b)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("standard multicosimplicial objects are functors", "[cosimplicial]") {
  for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(standard_multi(n, 2, 2).validate());
  CHECK_NOTHROW(standard_multi(2, 2, 3).validate());
}

TEST_CASE("structure maps act by postcomposition", "[cosimplicial]") {
  auto x = standard_multi(2, 2, 2);
  for (auto& a : all_multimaps(2, 2)) {
    auto f = x.structure_map(a);
    const int m = 1;
    auto d0 = enumerate_monotone(m, a[0].domain()), d1 = enumerate_monotone(m, a[1].domain());
    const auto n1 = count_monotone(m, a[1].domain()), c1 = count_monotone(m, a[1].codomain());
    for (std::size_t s = 0; s < d0.size(); ++s)
      for (std::size_t t = 0; t < d1.size(); ++t) {
        auto img = monotone_rank(compose(a[0], d0[s])) * c1 + monotone_rank(compose(a[1], d1[t]));
        CHECK(static_cast<std::size_t>(f.at[m][s * n1 + t]) == img);
      }
  }
}

TEST_CASE("structure maps compose", "[cosimplicial]") {
  auto x = standard_multi(2, 1, 2);
  auto maps = all_multimaps(2, 1);
  for (auto& f : maps)
    for (auto& g : maps)
      if (g.domain() == f.codomain()) CHECK(x.structure_map(compose(g, f)) == compose(x.structure_map(g), x.structure_map(f)));
}

TEST_CASE("validate names a broken relation", "[cosimplicial]") {
  auto x = standard_multi(1, 2, 2);
  Step s{0, true, 0};
  auto& g = x.generator_map(1, s);
  g = x.generator_map(1, Step{0, true, 2});
  try {
    x.validate();
    FAIL("expected a functoriality error");
  } catch (const FunctorialityError& e) {
    CHECK(std::string(e.what()).find("relation") != std::string::npos);
  }
}

TEST_CASE("diagonal of the standard bicosimplicial object", "[cosimplicial]") {
  auto d = diagonal(standard_multi(2, 2, 2));
  CHECK_NOTHROW(d.validate());
  CHECK(d.value({1}) == product(standard_simplex(1, 2), standard_simplex(1, 2)));
  CHECK(diagonal(standard_multi(1, 2, 2)) == standard_multi(1, 2, 2));
  auto c = constant_multi(boundary(2, 2), 2, 2);
  CHECK(diagonal(c) == constant_multi(boundary(2, 2), 1, 2));
}

TEST_CASE("reindexing along a projection", "[cosimplicial]") {
  auto x = zero_skeleton(standard_multi(1, 2, 2));
  auto w = reindex(x, 2, {0});
  CHECK_NOTHROW(w.validate());
  CHECK(path_components(w.value({1, 1})).count == 2);
  CHECK(diagonal(w) == x);
}

TEST_CASE("degreewise zero skeleton", "[cosimplicial]") {
  MultiMorphism inc;
  auto z = zero_skeleton(standard_multi(2, 2, 2), &inc);
  CHECK_NOTHROW(z.validate());
  CHECK(naturality_defect(z, standard_multi(2, 2, 2), inc).empty());
  CHECK(path_components(z.value({1, 1})).count == 4);
}

TEST_CASE("natural self maps of the standard cosimplicial object", "[cosimplicial]") {
  auto d = standard_multi(1, 2, 2);
  auto all = enumerate_morphisms(d, d);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == identity_morphism(d));
  auto pt = constant_multi(point(2), 2, 2);
  CHECK(count_morphisms(standard_multi(2, 2, 2), pt) == 1);
  CHECK(naturality_defect(standard_multi(2, 2, 2), pt, to_terminal(standard_multi(2, 2, 2))).empty());
}

TEST_CASE("degreewise product", "[cosimplicial]") {
  auto a = standard_multi(2, 1, 2);
  auto b = constant_multi(discrete(2, 2), 2, 1);
  auto p = product(a, b);
  CHECK_NOTHROW(p.validate());
  CHECK(naturality_defect(p, a, projection_first(a, b)).empty());
  CHECK(naturality_defect(p, b, projection_second(a, b)).empty());
}
