#include <catch_amalgamated.hpp>

#include <set>

#include <cosimplex/matching.hpp>

using namespace cosimplex;

namespace {

MonotoneMap mm(int cod, std::vector<int> v) { return MonotoneMap(cod, std::move(v)); }

// Oracle for the split: search for any epi psi : [k] -> [j], j < k, that every component factors through.
bool factors_through_proper_diagonal(const MultiMap& m) {
  const int k = m[0].domain();
  for (int j = 0; j < k; ++j)
    for (auto& psi : enumerate_epis(k, j)) {
      bool all = true;
      for (auto& c : m.components) all = all && epi_factors_through(c, psi);
      if (all) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("matching category sizes", "[matching]") {
  CHECK(MatchingCategory(1, 1).size() == 1);
  CHECK(MatchingCategory(2, 1).size() == 3);
  CHECK(MatchingCategory(1, 0).size() == 0);
  // (number of epis out of [k])^n - 1 = (2^k)^n - 1
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      CHECK(MatchingCategory(n, k).size() == static_cast<std::size_t>((1 << (k * n)) - 1));
}

TEST_CASE("matching category is a valid thin category", "[matching]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k) {
      MatchingCategory mc(n, k);
      mc.category().validate();
      for (std::size_t a = 0; a < mc.size(); ++a)
        for (int f : mc.category().out(static_cast<int>(a))) {
          int b = mc.category().arrow(f).tgt;
          CHECK(compose(mc.connecting(static_cast<int>(a), b), mc.object(static_cast<int>(a))) == mc.object(b));
        }
    }
}

TEST_CASE("terminal factorization examples", "[matching]") {
  auto tf = terminal_factorization(MultiMap({mm(1, {0, 0, 1}), mm(1, {0, 1, 1})}));
  CHECK(tf.beta == MonotoneMap::identity(2));
  auto alpha = mm(1, {0, 0, 1});
  CHECK(terminal_factorization(diagonal_embed(alpha, 3)).beta == alpha);
  tf = terminal_factorization(MultiMap({mm(1, {0, 0, 1, 1}), mm(1, {0, 0, 0, 1})}));
  CHECK(tf.beta == mm(2, {0, 0, 1, 2}));
  CHECK(compose(tf.rest, diagonal_embed(tf.beta, 2)) == MultiMap({mm(1, {0, 0, 1, 1}), mm(1, {0, 0, 0, 1})}));
}

TEST_CASE("terminal factorization is certified on every matching object", "[matching]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      MatchingCategory mc(n, k);
      for (auto& m : mc.objects()) {
        auto cert = certify_terminal_factorization(m);
        INFO(to_string(m) << ": " << cert.failure);
        CHECK(cert.ok);
        CHECK(cert.diagonal_factorizations >= 1);
      }
    }
}

TEST_CASE("filtration for n=2, k=1", "[matching]") {
  MatchingCategory mc(2, 1);
  auto s0 = filtration_stage(mc, -1);
  REQUIRE(s0.size() == 1);
  CHECK(mc.object(s0[0]) == diagonal_embed(mm(0, {0, 0}), 2));
  CHECK(filtration_stage(mc, 1).size() == 3);
  auto split = split_new_objects(mc, 0);
  CHECK(split.S.empty());
  CHECK(split.T.size() == 2);
  CHECK_THROWS_AS(filtration_stage(mc, 2), std::out_of_range);
  CHECK_THROWS_AS(filtration_stage(mc, -2), std::out_of_range);
}

TEST_CASE("filtration stages are nested and exhaust the matching category", "[matching][property]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      MatchingCategory mc(n, k);
      const int top = n * k - 1;
      CHECK(filtration_stage(mc, top).size() == mc.size());
      std::size_t diag = 0;
      for (auto& m : mc.objects()) diag += all_components_equal(m) ? 1 : 0;
      CHECK(filtration_stage(mc, -1).size() == diag);
      for (int i = -1; i < top; ++i) {
        auto a = filtration_stage(mc, i), b = filtration_stage(mc, i + 1);
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        auto split = split_new_objects(mc, i);
        CHECK(split.S.size() + split.T.size() + a.size() == b.size());
        for (int s : split.S) CHECK(factors_through_proper_diagonal(mc.object(s)));
        for (int t : split.T) CHECK_FALSE(factors_through_proper_diagonal(mc.object(t)));
        auto p = prime_stage(mc, i);
        CHECK(p.size() == a.size() + split.S.size());
      }
    }
}
