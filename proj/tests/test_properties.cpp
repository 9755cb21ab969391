#include <catch_amalgamated.hpp>

#include <random>

#include <cosimplex/corpus.hpp>
#include <cosimplex/kan_extension.hpp>
#include <cosimplex/reedy.hpp>
#include <cosimplex/serialize.hpp>
#include <cosimplex/tot.hpp>

using namespace cosimplex;

namespace {

TruncSSet random_object(std::mt19937& rng, int cap) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return random_subcomplex(product(standard_simplex(1, cap), standard_simplex(1, cap)), rng);
    case 1: return random_quotient(standard_simplex(2, cap), rng);
    case 2: return random_subcomplex(boundary(3, cap), rng);
    default: return random_quotient(product(standard_simplex(1, cap), boundary(2, cap)), rng);
  }
}

MonotoneMap random_monotone(std::mt19937& rng, int m, int n) {
  auto all = enumerate_monotone(m, n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("structure maps compose on random objects", "[property]") {
  const auto seed = GENERATE(range(1u, 9u));
  std::mt19937 rng(seed);
  auto k = random_object(rng, 2);
  k.validate();
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<int> deg(0, 2);
    const int a = deg(rng), b = deg(rng), c = deg(rng);
    auto f = random_monotone(rng, a, b), g = random_monotone(rng, b, c);
    for (std::size_t x = 0; x < k.count(c); ++x)
      CHECK(k.act(f, k.act(g, static_cast<int>(x))) == k.act(compose(g, f), static_cast<int>(x)));
  }
}

TEST_CASE("Tot commutes with the diagonal on random constant objects", "[property]") {
  const auto seed = GENERATE(range(1u, 7u));
  std::mt19937 rng(seed);
  auto x = constant_multi(random_object(rng, 2), 2, 2);
  auto v = tot_iso_diagonal(x);
  INFO(v.detail);
  CHECK(v.passed);
  // Tot of a constant object is its set of vertices in degree 0
  CHECK(v.tot_counts[0] == x.value(0).count(0));
}

TEST_CASE("adjunction is bijective on random constant and product objects", "[property]") {
  const auto seed = GENERATE(range(1u, 7u));
  std::mt19937 rng(seed);
  auto k = random_object(rng, 2);
  auto x = product(standard_multi(2, 2, 2), constant_multi(k, 2, 2));
  auto v = adjunction_bijection(x);
  INFO(v.detail);
  CHECK(v.passed);
  CHECK(v.left == static_cast<std::size_t>(k.count(0)));
}

TEST_CASE("filtration isomorphisms and pullback squares on random maps", "[property]") {
  const auto seed = GENERATE(range(1u, 5u));
  std::mt19937 rng(seed);
  SSetMap inc;
  auto square = product(standard_simplex(1, 2), standard_simplex(1, 2));
  auto sub = random_subcomplex(square, rng, &inc);
  auto x = constant_multi(sub, 2, 2), y = constant_multi(square, 2, 2);
  MultiMorphism f;
  for (std::size_t o = 0; o < x.num_objects(); ++o) f.at.push_back(inc);
  REQUIRE(naturality_defect(x, y, f).empty());
  for (int k = 1; k <= 2; ++k)
    for (int i = -1; i <= 2 * k - 2; ++i) {
      auto v = check_prime_stage_iso(x, y, f, k, i);
      INFO("k=" << k << " i=" << i << " " << v.iso.detail);
      CHECK(v.iso.passed);
      CHECK(check_pullback_square(x, k, i).passed);
    }
}

TEST_CASE("serialization round-trips random objects", "[property]") {
  const auto seed = GENERATE(range(1u, 9u));
  std::mt19937 rng(seed);
  auto k = random_object(rng, 3);
  CHECK(sset_from_json(to_json(k)) == k);
  auto x = product(standard_multi(2, 1, 2), constant_multi(random_object(rng, 2), 2, 1));
  CHECK(multicosimplicial_from_json(to_json(x)) == x);
}

TEST_CASE("diagonal of a capped Reedy fibration passes on random fibers", "[property]") {
  const auto seed = GENERATE(range(1u, 5u));
  std::mt19937 rng(seed);
  auto k = random_object(rng, 2);
  auto x = constant_multi(k, 2, 2), pt = constant_multi(point(2), 2, 2);
  auto r = check_diagonal_preserves_fibration(x, pt, to_terminal(x), 2);
  INFO(r.detail);
  CHECK(r.passed());
  CHECK(r.precondition == kan_complex_check(k, 2).passed);
}
