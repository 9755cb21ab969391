#pragma once

#include <string>
#include <vector>

#include "cosimplicial.hpp"
#include "homology.hpp"
#include "kan_extension.hpp"
#include "reedy.hpp"

namespace cosimplex {

struct CofibrancyVerdict {
  bool passed = true;
  std::vector<bool> latching_mono;      ///< per degree 0..N
  std::vector<std::size_t> latching_vertices;
  std::size_t augmentation = 0;         ///< size of the equalizer of the two cofaces X^0 -> X^1 on vertices
};

/// Latching maps of a cosimplicial object are monomorphisms in every degree, and the
/// equalizer of d^0, d^1 : X^0 -> X^1 (the maximal augmentation) on vertices.
inline CofibrancyVerdict cofibrancy_certificate(const MultiCosimplicial& x) {
  if (x.arity() != 1) throw std::invalid_argument("cofibrancy_certificate: expects a cosimplicial object");
  CofibrancyVerdict v;
  for (int k = 0; k <= x.trunc(); ++k) {
    auto l = latching_object(x, {k});
    v.latching_mono.push_back(l.injective);
    v.latching_vertices.push_back(l.colimit.value.count(0));
    v.passed = v.passed && l.injective;
  }
  if (x.trunc() >= 1) {
    auto d0 = x.structure_map(MultiMap({MonotoneMap::coface(1, 0)}));
    auto d1 = x.structure_map(MultiMap({MonotoneMap::coface(1, 1)}));
    for (std::size_t a = 0; a < x.value(0).count(0); ++a) v.augmentation += d0.at[0][a] == d1.at[0][a];
  }
  return v;
}

/// The degreewise 0-skeleton X of the cosimplicial standard simplex, the bicosimplicial W with
/// W^(p,q) = X^p, and the left Kan extension LX of X along the diagonal.
struct CounterexampleBundle {
  MultiCosimplicial x, w;
  KanExtension lx;
  int pi0_lx_11 = 0, pi0_w_11 = 0;
  bool lx_discrete = true;
  IsoVerdict lx_is_skeleton;  ///< LX against the degreewise 0-skeleton of Delta^(2)
  bool x_is_diag_w = false;
  CofibrancyVerdict cofibrancy;
};

/// LX -> sk_0 Delta^(2): the class of (alpha, x) goes to (alpha_1 x, alpha_2 x), read back in the skeleton.
inline MultiMorphism skeleton_comparison(const KanExtension& ke, const MultiMorphism& x_inc, const MultiMorphism& z_inc) {
  MultiMorphism f;
  const int cap = ke.value.cap();
  for (std::size_t o = 0; o < ke.overcategories.size(); ++o) {
    const auto& oc = ke.overcategories[o];
    const auto& col = ke.colimits[o];
    std::vector<std::unordered_map<int, int>> back(cap + 1);
    for (int m = 0; m <= cap; ++m)
      for (std::size_t s = 0; s < z_inc.at[o].at[m].size(); ++s) back[m][z_inc.at[o].at[m][s]] = static_cast<int>(s);
    SSetMap g;
    for (int m = 0; m <= cap; ++m) g.at.emplace_back(col.value.count(m), -1);
    for (std::size_t a = 0; a < oc.objects.size(); ++a) {
      const auto& alpha = oc.objects[a];
      const int k = oc.degree(static_cast<int>(a));
      for (int m = 0; m <= cap; ++m) {
        auto thetas = enumerate_monotone(m, k);
        const auto& inc = x_inc.at[k].at[m];
        for (std::size_t s = 0; s < inc.size(); ++s) {
          std::size_t idx = 0;
          for (int j = 0; j < alpha.arity(); ++j)
            idx = idx * count_monotone(m, alpha[j].codomain()) + monotone_rank(compose(alpha[j], thetas[inc[s]]));
          auto it = back[m].find(static_cast<int>(idx));
          g.at[m][col.injection[a].at[m][s]] = it == back[m].end() ? -1 : it->second;
        }
      }
    }
    f.at.push_back(std::move(g));
  }
  return f;
}

inline CounterexampleBundle build_counterexample(int trunc, int cap) {
  if (trunc < 1 || cap < 1) throw std::invalid_argument("build_counterexample: needs trunc >= 1 and cap >= 1");
  CounterexampleBundle b;
  MultiMorphism x_inc, z_inc;
  b.x = zero_skeleton(standard_multi(1, trunc, cap), &x_inc);
  b.w = reindex(b.x, 2, {0});
  b.lx = left_kan_extend(b.x, 2);
  const std::vector<int> at{1, 1};
  b.pi0_lx_11 = path_components(b.lx.value.value(at)).count;
  b.pi0_w_11 = path_components(b.w.value(at)).count;
  for (auto& v : b.lx.value.values())
    for (int m = 1; m <= cap; ++m) b.lx_discrete = b.lx_discrete && v.nondegenerate_count(m) == 0;
  auto z = zero_skeleton(standard_multi(2, trunc, cap), &z_inc);
  auto f = skeleton_comparison(b.lx, x_inc, z_inc);
  b.lx_is_skeleton = {true, naturality_defect(b.lx.value, z, f)};
  if (!b.lx_is_skeleton.detail.empty()) b.lx_is_skeleton.passed = false;
  for (std::size_t o = 0; o < z.num_objects() && b.lx_is_skeleton.passed; ++o)
    b.lx_is_skeleton = check_isomorphism(b.lx.value.value(static_cast<int>(o)), z.value(static_cast<int>(o)), f.at[o]);
  b.x_is_diag_w = diagonal(b.w) == b.x;
  b.cofibrancy = cofibrancy_certificate(b.x);
  return b;
}

}  // namespace cosimplex
