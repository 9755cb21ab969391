#include <catch_amalgamated.hpp>

#include <cosimplex/corpus.hpp>
#include <cosimplex/kan.hpp>

using namespace cosimplex;

TEST_CASE("corpus objects and maps are valid", "[corpus]") {
  for (int arity : {1, 2, 3}) {
    auto c = build_corpus(arity, 2, 2, 11);
    CHECK(c.objects.size() >= (arity == 1 ? 12u : 15u));
    for (auto& o : c.objects) {
      INFO(o.name);
      CHECK_NOTHROW(o.value.validate());
      CHECK(o.value.arity() == arity);
    }
    for (auto& m : c.maps) {
      INFO(m.name);
      CHECK(naturality_defect(c.objects[m.source].value, c.objects[m.target].value, m.map).empty());
    }
  }
}

TEST_CASE("corpus is deterministic in the seed", "[corpus]") {
  auto a = build_corpus(2, 2, 2, 5), b = build_corpus(2, 2, 2, 5);
  REQUIRE(a.objects.size() == b.objects.size());
  for (std::size_t i = 0; i < a.objects.size(); ++i) CHECK(a.objects[i].value == b.objects[i].value);
}

TEST_CASE("random perturbations are subcomplexes and quotients", "[corpus]") {
  std::mt19937 rng(2);
  auto sq = product(standard_simplex(1, 2), standard_simplex(1, 2));
  for (int t = 0; t < 10; ++t) {
    SSetMap inc;
    auto s = random_subcomplex(sq, rng, &inc);
    CHECK_NOTHROW(s.validate());
    CHECK(is_simplicial_map(s, sq, inc));
    CHECK(is_injective(inc, sq));
    auto q = random_quotient(standard_simplex(2, 2), rng);
    CHECK_NOTHROW(q.validate());
    CHECK(q.count(0) >= 1);
  }
}

TEST_CASE("indiscrete groupoid is Kan", "[corpus]") {
  auto g = indiscrete_groupoid(2, 3);
  CHECK(g.nondegenerate_count(1) == 2);
  CHECK(kan_complex_check(g, 2).passed);
}

TEST_CASE("twenty simplicial set pairs", "[corpus]") {
  auto p = build_pairs(2);
  CHECK(p.size() == 20);
  for (auto& q : p) CHECK_NOTHROW(q.k.validate());
}
