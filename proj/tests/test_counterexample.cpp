#include <catch_amalgamated.hpp>

#include <cosimplex/counterexample.hpp>

using namespace cosimplex;

TEST_CASE("Kan extension of the 0-skeleton has four components at (1,1)", "[counterexample]") {
  auto b = build_counterexample(2, 2);
  CHECK(b.pi0_lx_11 == 4);
  CHECK(b.pi0_w_11 == 2);
  CHECK(b.lx_discrete);
  INFO(b.lx_is_skeleton.detail);
  CHECK(b.lx_is_skeleton.passed);
  CHECK(b.x_is_diag_w);
  CHECK_NOTHROW(b.w.validate());
  CHECK_NOTHROW(b.lx.value.validate());
}

TEST_CASE("the 0-skeleton is cofibrant with empty augmentation", "[counterexample]") {
  auto b = build_counterexample(2, 2);
  const auto& c = b.cofibrancy;
  CHECK(c.passed);
  CHECK(c.latching_vertices == std::vector<std::size_t>{0, 2, 3});
  CHECK(c.augmentation == 0);
}

TEST_CASE("counterexample at the smallest truncation", "[counterexample]") {
  auto b = build_counterexample(1, 1);
  CHECK(b.pi0_lx_11 == 4);
  CHECK(b.pi0_w_11 == 2);
  CHECK(b.lx_is_skeleton.passed);
  CHECK_THROWS(build_counterexample(0, 1));
}
