#include <catch_amalgamated.hpp>

#include <algorithm>

#include <cosimplex/diagrams.hpp>
#include <cosimplex/homology.hpp>
#include <cosimplex/matching.hpp>

using namespace cosimplex;

TEST_CASE("set pullback", "[diagrams]") {
  SetDiagram d{cospan_shape(), {3, 2, 2}, {}};
  d.maps.resize(d.shape->num_morphisms());
  for (int o = 0; o < 3; ++o) {
    std::vector<int> id(d.sizes[o]);
    std::iota(id.begin(), id.end(), 0);
    d.maps[d.shape->identity(o)] = id;
  }
  d.maps[3] = {0, 0, 1};
  d.maps[4] = {0, 0};
  REQUIRE(d.defect().empty());
  CHECK(limit(d).families.size() == 4);
  CHECK(colimit(d).size == 2);
}

TEST_CASE("limit over the empty category is a point", "[diagrams]") {
  SSetDiagram d{std::make_shared<FinCat>(), {}, {}};
  auto l = limit(SetDiagram{d.shape, {}, {}});
  CHECK(l.families.size() == 1);
}

TEST_CASE("pushout of an edge boundary onto a point gives a circle", "[diagrams]") {
  auto span = std::make_shared<FinCat>();
  span->add_object("b");
  span->add_object("e");
  span->add_object("p");
  span->add_morphism(0, 1);
  span->add_morphism(0, 2);
  SSetMap inc;
  auto bd = boundary(1, 2, &inc);
  SSetMap to_pt;
  for (int m = 0; m <= 2; ++m) to_pt.at.emplace_back(bd.count(m), 0);
  SSetDiagram d{span, {bd, standard_simplex(1, 2), point(2)}, {}};
  d.maps.resize(span->num_morphisms());
  for (int o = 0; o < 3; ++o) d.maps[span->identity(o)] = identity_map(d.values[o]);
  d.maps[3] = inc;
  d.maps[4] = to_pt;
  REQUIRE(d.defect().empty());
  auto c = colimit(d);
  c.value.validate();
  CHECK(betti(c.value).reduced == std::vector<long>{0, 1});
}

TEST_CASE("simplicial pullback agrees with the limit", "[diagrams]") {
  auto a = standard_simplex(1, 2), z = standard_simplex(1, 2);
  auto b = boundary(1, 2);
  SSetMap inc;
  boundary(1, 2, &inc);
  auto p = pullback(a, identity_map(a), b, inc, z);
  p.value.validate();
  CHECK(p.value.count(0) == 2);
  CHECK(p.value.nondegenerate_count(1) == 0);
  SSetDiagram d{cospan_shape(), {a, b, z}, {}};
  d.maps.resize(5);
  for (int o = 0; o < 3; ++o) d.maps[d.shape->identity(o)] = identity_map(d.values[o]);
  d.maps[3] = identity_map(a);
  d.maps[4] = inc;
  auto l = limit(d);
  l.value.validate();
  for (int m = 0; m <= 2; ++m) CHECK(l.value.count(m) == p.value.count(m));
}

TEST_CASE("identity inclusion is cofinal", "[diagrams]") {
  MatchingCategory mc(std::vector<int>{1, 1});
  std::vector<int> all(mc.size());
  std::iota(all.begin(), all.end(), 0);
  auto inc = full_inclusion(mc.category(), all);
  auto r = is_left_cofinal(inc.functor);
  CHECK(r.cofinal);
  CHECK(std::all_of(r.terminal_witness.begin(), r.terminal_witness.end(), [](int w) { return w >= 0; }));
}

TEST_CASE("discrete subcategory of a cospan is not cofinal", "[diagrams]") {
  auto c = cospan_shape();
  auto inc = full_inclusion(*c, {0, 1});
  auto r = is_left_cofinal(inc.functor);
  CHECK_FALSE(r.cofinal);
  CHECK(r.failing == std::vector<int>{2});
}

TEST_CASE("filtration stages are cofinal in the primed stages", "[diagrams]") {
  for (auto at : std::vector<std::vector<int>>{{2, 2}, {1, 1}, {1, 1, 1}, {3, 3}}) {
    MatchingCategory mc(at);
    const int nk = total_degree(at);
    for (int i = -1; i <= nk - 2; ++i) {
      auto prime = prime_stage(mc, i);
      auto stage = filtration_stage(mc, i);
      auto big = full_inclusion(mc.category(), prime);
      std::vector<int> pos;
      for (int o : stage) pos.push_back(static_cast<int>(std::lower_bound(prime.begin(), prime.end(), o) - prime.begin()));
      auto small = full_inclusion(*big.sub, pos);
      auto r = is_left_cofinal(small.functor);
      INFO("stage " << i);
      CHECK(r.cofinal);
      CHECK(std::all_of(r.terminal_witness.begin(), r.terminal_witness.end(), [](int w) { return w >= 0; }));
    }
  }
}
