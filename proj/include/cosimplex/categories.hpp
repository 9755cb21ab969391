#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "delta.hpp"
#include "fincat.hpp"
#include "hashing.hpp"
#include "sset.hpp"

namespace cosimplex {

/// Nerve truncated at cap. The m-simplex keys are chains of m composable arrows
/// (identities allowed); 0-simplices are keyed by {object}.
struct Nerve {
  TruncSSet sset;
  std::vector<std::vector<std::vector<int>>> chains;  ///< per dimension, indexed like sset
};

inline Nerve nerve(const FinCat& c, int cap) {
  KeyedBuilder<std::vector<int>, VectorHash> kb(cap);
  for (std::size_t o = 0; o < c.num_objects(); ++o) kb.add(0, {static_cast<int>(o)});
  if (cap >= 1)
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) kb.add(1, {static_cast<int>(f)});
  for (int m = 2; m <= cap; ++m)
    for (const auto& ch : kb.keys[m - 1]) {
      std::vector<int> ext = ch;
      ext.push_back(0);
      for (int g : c.out(c.arrow(ch.back()).tgt)) {
        ext.back() = g;
        kb.add(m, ext);
      }
    }
  auto face = [&](int m, int i, const std::vector<int>& ch) -> std::vector<int> {
    if (m == 1) return {i == 0 ? c.arrow(ch[0]).tgt : c.arrow(ch[0]).src};
    std::vector<int> out;
    for (int t = 0; t < m; ++t) {
      if (i == 0 && t == 0) continue;
      if (i == m && t == m - 1) continue;
      if (i > 0 && i < m && t == i - 1) {
        out.push_back(c.compose(ch[i], ch[i - 1]));
        ++t;
        continue;
      }
      out.push_back(ch[t]);
    }
    return out;
  };
  auto degen = [&](int m, int i, const std::vector<int>& ch) -> std::vector<int> {
    if (m == 0) return {c.identity(ch[0])};
    std::vector<int> out(ch.begin(), ch.end());
    int obj = i < m ? c.arrow(ch[i]).src : c.arrow(ch[m - 1]).tgt;
    out.insert(out.begin() + i, c.identity(obj));
    return out;
  };
  Nerve n{kb.build(face, degen), std::move(kb.keys)};
  return n;
}

/// Category of simplices: objects are all simplices up to the cap, an arrow (m, theta^* y) -> (k, y)
/// for every theta : [m] -> [k]. Object ids follow dimension order.
struct SimplexCategory {
  FinCat cat;
  std::vector<std::pair<int, int>> objects;  ///< (dimension, simplex)
  std::vector<MonotoneMap> arrow_label;
};

inline SimplexCategory category_of_simplices(const TruncSSet& k) {
  LabeledCategoryBuilder<MonotoneMap, MonotoneMapHash> b;
  SimplexCategory sc;
  std::vector<int> offset(k.cap() + 2, 0);
  for (int m = 0; m <= k.cap(); ++m) {
    offset[m + 1] = offset[m] + static_cast<int>(k.count(m));
    for (std::size_t x = 0; x < k.count(m); ++x) {
      b.add_object(std::to_string(m) + ":" + std::to_string(x), MonotoneMap::identity(m));
      sc.objects.emplace_back(m, static_cast<int>(x));
    }
  }
  for (int d = 0; d <= k.cap(); ++d)
    for (int m = 0; m <= k.cap(); ++m) {
      auto thetas = enumerate_monotone(m, d);
      for (std::size_t y = 0; y < k.count(d); ++y)
        for (auto& th : thetas) b.add_morphism(offset[m] + k.act(th, static_cast<int>(y)), offset[d] + static_cast<int>(y), th);
    }
  sc.cat = b.finish([](const MonotoneMap& g, const MonotoneMap& f) { return compose(g, f); });
  sc.arrow_label = b.take_labels();
  return sc;
}

/// Overcategory of the diagonal Delta_{<=N} -> (Delta_{<=N})^n at a degree tuple: objects are
/// (k, alpha) with alpha : ([k], ..., [k]) -> target, arrows theta : [k] -> [k'] with alpha' . theta^n = alpha.
struct DiagonalOvercategory {
  FinCat cat;
  std::vector<MultiMap> objects;
  std::vector<MonotoneMap> arrow_label;
  std::vector<int> target;

  int degree(int o) const { return objects[o][0].domain(); }
};

inline std::vector<MultiMap> enumerate_multimaps(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<MultiMap> out{MultiMap{}};
  for (std::size_t j = 0; j < to.size(); ++j) {
    std::vector<MultiMap> next;
    auto maps = enumerate_monotone(from[j], to[j]);
    for (auto& pre : out)
      for (auto& f : maps) {
        MultiMap m = pre;
        m.components.push_back(f);
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

inline DiagonalOvercategory diagonal_overcategory(const std::vector<int>& target, int trunc) {
  const int n = static_cast<int>(target.size());
  LabeledCategoryBuilder<MonotoneMap, MonotoneMapHash> b;
  DiagonalOvercategory oc;
  oc.target = target;
  std::unordered_map<MultiMap, int, MultiMapHash> index;
  for (int k = 0; k <= trunc; ++k)
    for (auto& a : enumerate_multimaps(std::vector<int>(n, k), target)) {
      index[a] = b.add_object(to_string(a), MonotoneMap::identity(k));
      oc.objects.push_back(a);
    }
  for (std::size_t t = 0; t < oc.objects.size(); ++t) {
    const int kt = oc.objects[t][0].domain();
    for (int k = 0; k <= trunc; ++k)
      for (auto& th : enumerate_monotone(k, kt)) {
        int s = index.at(compose(oc.objects[t], diagonal_embed(th, n)));
        b.add_morphism(s, static_cast<int>(t), th);
      }
  }
  oc.cat = b.finish([](const MonotoneMap& g, const MonotoneMap& f) { return compose(g, f); });
  oc.arrow_label = b.take_labels();
  return oc;
}

/// Delta_{<=N} over [k].
inline DiagonalOvercategory simplex_overcategory(int k, int trunc) { return diagonal_overcategory({k}, trunc); }

/// Overcategory of (Delta_{<=N})^n at a degree tuple: objects (i, tau : i -> target), arrows
/// sigma with tau' . sigma = tau.
struct ProductOvercategory {
  FinCat cat;
  std::vector<MultiMap> objects;
  std::vector<MultiMap> arrow_label;
};

inline ProductOvercategory product_overcategory(const std::vector<int>& target, int trunc) {
  const int n = static_cast<int>(target.size());
  LabeledCategoryBuilder<MultiMap, MultiMapHash> b;
  ProductOvercategory oc;
  std::unordered_map<MultiMap, int, MultiMapHash> index;
  std::vector<std::vector<int>> degree_tuples{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<int>> next;
    for (auto& d : degree_tuples)
      for (int i = 0; i <= trunc; ++i) {
        auto e = d;
        e.push_back(i);
        next.push_back(std::move(e));
      }
    degree_tuples = std::move(next);
  }
  for (auto& d : degree_tuples)
    for (auto& tau : enumerate_multimaps(d, target)) {
      index[tau] = b.add_object(to_string(tau), MultiMap::identity(d));
      oc.objects.push_back(tau);
    }
  for (std::size_t t = 0; t < oc.objects.size(); ++t)
    for (auto& d : degree_tuples)
      for (auto& sigma : enumerate_multimaps(d, oc.objects[t].domain())) {
        int s = index.at(compose(oc.objects[t], sigma));
        b.add_morphism(s, static_cast<int>(t), sigma);
      }
  oc.cat = b.finish([](const MultiMap& g, const MultiMap& f) { return compose(g, f); });
  oc.arrow_label = b.take_labels();
  return oc;
}

}  // namespace cosimplex
