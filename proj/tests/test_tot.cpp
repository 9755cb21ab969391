#include <catch_amalgamated.hpp>

#include <cosimplex/tot.hpp>

using namespace cosimplex;

TEST_CASE("Tot of simple objects", "[tot]") {
  auto pt = constant_multi(point(2), 2, 2);
  auto t = tot(pt);
  for (int m = 0; m <= 2; ++m) CHECK(t.value.count(m) == 1);
  auto delta = standard_multi(1, 2, 2);
  auto td = tot(delta);
  td.value.validate();
  CHECK(td.value.count(0) == count_morphisms(delta, delta));
  CHECK(td.value.count(0) == 1);
  auto d2 = standard_multi(2, 2, 2);
  auto t2 = tot(d2);
  t2.value.validate();
  CHECK(t2.value.count(0) == count_morphisms(d2, d2));
  CHECK(t2.value.count(0) >= 1);
}

TEST_CASE("Tot is unchanged by the diagonal", "[tot]") {
  std::vector<MultiCosimplicial> xs{constant_multi(discrete(2, 2), 2, 2), standard_multi(2, 2, 2), zero_skeleton(standard_multi(2, 2, 2))};
  for (auto& x : xs) {
    auto v = tot_iso_diagonal(x);
    INFO(v.detail);
    CHECK(v.passed);
  }
}

TEST_CASE("one-variable comparison", "[tot][bk]") {
  auto one = overcategory_nerves(1, 2, 2);
  CHECK_NOTHROW(one.value.validate());
  auto phi = bk_map(one);
  CHECK(naturality_defect(one.value, standard_multi(1, 2, 2), phi).empty());
  // the vertex tau = (0,1,1) : [2] -> [1] goes to tau(2) = 1
  const auto& n1 = one.at[1];
  const int tau = n1.object_index.at(MultiMap({MonotoneMap(1, {0, 1, 1})}));
  const int s = n1.simplex_index[0].at({tau});
  CHECK(phi.at[1].at[0][s] == 1);
  for (int k = 0; k <= 2; ++k) {
    const auto& b = one.value.value(k);
    CHECK(path_components(b).count == 1);
    CHECK(betti(b).acyclic());
  }
  for (std::size_t m = 0; m < phi.at[0].at.size(); ++m)
    for (int x : phi.at[0].at[m]) CHECK(x == 0);
}

TEST_CASE("product comparison agrees with its coordinate split", "[tot][bk]") {
  auto one = overcategory_nerves(1, 1, 1);
  auto phi1 = bk_map(one);
  auto two = overcategory_nerves(2, 1, 1);
  CHECK_NOTHROW(two.value.validate());
  auto phi2 = bk_map(two);
  CHECK(naturality_defect(two.value, standard_multi(2, 1, 1), phi2).empty());
  for (std::size_t o = 0; o < two.at.size(); ++o) {
    const auto& n = two.at[o];
    for (int m = 0; m <= 1; ++m)
      for (std::size_t s = 0; s < n.nerve.chains[m].size(); ++s)
        CHECK(product_bk_via_factors(n.chain(m, static_cast<int>(s)), n.target, one, phi1) == phi2.at[o].at[m][s]);
  }
}

TEST_CASE("comparison square", "[tot][bk]") {
  auto one = overcategory_nerves(1, 2, 2);
  auto phi = bk_map(one);
  auto v = check_bk_square(2, one, phi);
  INFO(v.detail);
  CHECK(v.passed);
  CHECK(v.simplices_checked > 0);
  auto x = standard_multi(2, 2, 2);
  auto h = check_homset_square(x, tot(x), one, phi);
  INFO(h.detail);
  CHECK(h.passed);
  CHECK(h.elements == tot(x).value.count(0) + tot(x).value.count(1) + tot(x).value.count(2));
}

TEST_CASE("homotopy limits of constant objects", "[tot][holim]") {
  auto one = overcategory_nerves(1, 2, 2);
  auto h = holim(constant_multi(discrete(2, 2), 1, 2), one);
  CHECK(h.value.count(0) == 2);
  CHECK(holim(constant_multi(point(2), 1, 2), one).value.count(0) == 1);
  auto b1 = overcategory_nerves(1, 1, 1), b2 = overcategory_nerves(2, 1, 1);
  auto x = constant_multi(discrete(2, 1), 2, 1);
  auto hx = holim(x, b2), hd = holim(diagonal(x), b1);
  auto r = holim_restriction_map(x, b2, hx, b1, hd);
  auto iso = check_isomorphism(hx.value, hd.value, r);
  INFO(iso.detail);
  CHECK(iso.passed);
}

TEST_CASE("hom-set square lands in the homotopy limit", "[tot][holim]") {
  auto one = overcategory_nerves(1, 1, 1);
  auto phi = bk_map(one);
  for (auto& x : {standard_multi(2, 1, 1), zero_skeleton(standard_multi(2, 1, 1))}) {
    auto hd = holim(diagonal(x), one);
    auto v = check_homset_square(x, tot(x), one, phi, &hd);
    INFO(v.detail);
    CHECK(v.passed);
    CHECK(v.checked_membership);
  }
}

TEST_CASE("overcategory of a product is the product of overcategories", "[tot]") {
  for (auto target : std::vector<std::vector<int>>{{1}, {1, 1}}) {
    auto v = overcategory_product_iso(target, 2, 1);
    INFO(v.detail);
    CHECK(v.passed);
  }
  auto w = overcategory_product_iso({1, 1}, 1, 2);
  INFO(w.detail);
  CHECK(w.passed);
  auto v = overcategory_product_iso({1, 2}, 2, 1);
  INFO(v.detail);
  CHECK(v.passed);
  CHECK(v.objects == 9 * 19);
}

TEST_CASE("diagonal overcategories are acyclic below the truncation", "[tot]") {
  for (auto target : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}}) {
    auto v = homotopy_cofinality_proxy(target, 2, 2);
    CHECK(v.passed);
  }
  // above the truncation the nerve sees the 2-skeleton of the cube
  auto v = homotopy_cofinality_proxy({1, 1, 1}, 2, 3);
  auto cube = product(std::vector<TruncSSet>(3, standard_simplex(1, 3)), 3);
  CHECK(v.betti.reduced[2] == betti(skeleton(cube, 2)).reduced[2]);
  CHECK(v.betti.reduced[2] == 6);
}
