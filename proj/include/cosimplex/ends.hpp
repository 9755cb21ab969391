#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cosimplicial.hpp"
#include "diagrams.hpp"
#include "exponential.hpp"
#include "hashing.hpp"
#include "hom.hpp"

namespace cosimplex {

/// A diagram given by its values and a generating set of maps. Natural transformations only
/// need to commute with the generators.
struct Presentation {
  struct Edge {
    int src, tgt;
    SSetMap map;
  };
  int cap = 0;
  std::vector<TruncSSet> values;
  std::vector<Edge> edges;
};

inline Presentation presentation(const SSetDiagram& d) {
  Presentation p{d.cap(), d.values, {}};
  for (std::size_t m = 0; m < d.maps.size(); ++m) {
    if (d.shape->is_identity(static_cast<int>(m))) continue;
    const Arrow& a = d.shape->arrow(static_cast<int>(m));
    p.edges.push_back({a.src, a.tgt, d.maps[m]});
  }
  return p;
}

inline Presentation presentation(const MultiCosimplicial& x) {
  Presentation p{x.cap(), x.values(), {}};
  for (std::size_t o = 0; o < x.num_objects(); ++o)
    for (auto& s : x.generators_out(static_cast<int>(o)))
      p.edges.push_back({static_cast<int>(o), x.step_target(static_cast<int>(o), s), x.generator_map(static_cast<int>(o), s)});
  return p;
}

inline void append_presentation(Algebra& alg, const Presentation& p) {
  const int base = static_cast<int>(alg.sizes.size());
  const int per = p.cap + 1;
  for (auto& v : p.values) append_sset(alg, v);
  for (auto& e : p.edges)
    for (int m = 0; m <= p.cap; ++m) alg.add_op(base + e.src * per + m, base + e.tgt * per + m, e.map.at[m]);
}

inline Algebra presentation_algebra(const Presentation& p) {
  Algebra a;
  append_presentation(a, p);
  return a;
}

/// Objectwise product with a fixed simplicial set.
inline Presentation product_with(const Presentation& p, const TruncSSet& s) {
  Presentation q{p.cap, {}, {}};
  for (auto& v : p.values) q.values.push_back(product(v, s));
  for (auto& e : p.edges) q.edges.push_back({e.src, e.tgt, product_map(e.map, identity_map(s), s, s)});
  return q;
}

inline std::vector<std::vector<int>> all_natural_maps(const Presentation& a, const Presentation& b, std::vector<std::size_t>* offsets = nullptr) {
  auto sa = presentation_algebra(a), sb = presentation_algebra(b);
  HomSearch search(sa, sb);
  if (offsets) *offsets = search.offsets();
  return search.all();
}

/// The simplicial set of natural maps K -> X: m-simplices are natural maps K x Delta[m] -> X.
struct EndHom {
  TruncSSet value;
  std::vector<std::size_t> k_count;  ///< per object and dimension: |K_o|_j at index o*(cap+1)+j
  std::vector<std::vector<std::size_t>> offset;  ///< per m: flat offsets, sort o*(cap+1)+j
  std::vector<std::vector<std::vector<int>>> maps;
  std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index;
  int cap = 0;

  std::size_t delta_count(int m, int j) const { return count_monotone(j, m); }

  /// Value of the m-simplex t at object o on (a, b), a in K_o of dimension j, b in Delta[m]_j.
  int eval(int m, int t, int o, int j, int a, int b) const {
    const std::size_t sort = static_cast<std::size_t>(o) * (cap + 1) + j;
    return maps[m][t][offset[m][sort] + static_cast<std::size_t>(a) * delta_count(m, j) + static_cast<std::size_t>(b)];
  }

  int find(int m, const std::vector<int>& flat) const {
    auto it = index[m].find(flat);
    return it == index[m].end() ? -1 : it->second;
  }
};

inline EndHom end_hom(const Presentation& k, const Presentation& x) {
  if (k.values.size() != x.values.size()) throw std::invalid_argument("end: shapes differ");
  const int cap = k.cap;
  EndHom e;
  e.cap = cap;
  e.value = TruncSSet(cap);
  for (auto& v : k.values)
    for (int j = 0; j <= cap; ++j) e.k_count.push_back(v.count(j));
  auto ax = presentation_algebra(x);
  for (int m = 0; m <= cap; ++m) {
    auto km = product_with(k, standard_simplex(m, cap));
    auto ak = presentation_algebra(km);
    HomSearch search(ak, ax);
    e.offset.push_back(search.offsets());
    e.maps.emplace_back();
    e.index.emplace_back();
    search.for_each([&](const std::vector<int>& v) {
      e.index[m].emplace(v, static_cast<int>(e.maps[m].size()));
      e.maps[m].push_back(v);
      return true;
    });
    e.value.set_count(m, e.maps[m].size());
  }
  const std::size_t nobj = k.values.size();
  auto reindex = [&](int m_from, int m_to, const MonotoneMap& theta) {
    std::vector<std::vector<int>> post(cap + 1);
    for (int j = 0; j <= cap; ++j) post[j] = postcompose_table(theta, j);
    std::vector<int> table, flat(e.offset[m_to].back());
    for (std::size_t t = 0; t < e.maps[m_from].size(); ++t) {
      for (std::size_t o = 0; o < nobj; ++o)
        for (int j = 0; j <= cap; ++j) {
          const std::size_t nb = e.delta_count(m_to, j), na = e.k_count[o * (cap + 1) + j];
          const std::size_t base = e.offset[m_to][o * (cap + 1) + j];
          for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < nb; ++b)
              flat[base + a * nb + b] = e.eval(m_from, static_cast<int>(t), static_cast<int>(o), j, static_cast<int>(a), post[j][b]);
        }
      table.push_back(e.find(m_to, flat));
    }
    return table;
  };
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) e.value.face_table(m, i) = reindex(m, m - 1, MonotoneMap::coface(m, i));
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) e.value.degen_table(m, i) = reindex(m, m + 1, MonotoneMap::codegeneracy(m, i));
  return e;
}

/// The same end as the equalizer of prod_c Map(K_c, X_c) and prod_{s : c -> c'} Map(K_c, X_c'),
/// computed as a limit of exponentials. Returns the limit with the comparison map from end_hom.
struct EqualizerEnd {
  SSetLimit limit;
  SSetMap comparison;  ///< end_hom -> limit
};

inline EqualizerEnd end_hom_via_exponentials(const SSetDiagram& k, const SSetDiagram& x, const EndHom& e) {
  const FinCat& c = *k.shape;
  const int cap = k.cap();
  auto shape = std::make_shared<FinCat>();
  std::vector<Exponential> diag_exp;
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    shape->add_object();
    diag_exp.push_back(exponential(k.values[o], x.values[o]));
  }
  struct Twist {
    int mor, src, tgt, node;
  };
  std::vector<Twist> twists;
  std::vector<Exponential> twist_exp;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(static_cast<int>(m))) continue;
    const Arrow& a = c.arrow(static_cast<int>(m));
    int node = shape->add_object();
    twists.push_back({static_cast<int>(m), a.src, a.tgt, node});
    twist_exp.push_back(exponential(k.values[a.src], x.values[a.tgt]));
  }
  SSetDiagram d{shape, {}, {}, cap};
  for (auto& ex : diag_exp) d.values.push_back(ex.value);
  for (auto& ex : twist_exp) d.values.push_back(ex.value);
  std::vector<SSetMap> arrows;
  for (std::size_t t = 0; t < twists.size(); ++t) {
    auto& tw = twists[t];
    shape->add_morphism(tw.src, tw.node);
    arrows.push_back(exponential_postcompose(diag_exp[tw.src], twist_exp[t], x.maps[tw.mor]));
    shape->add_morphism(tw.tgt, tw.node);
    arrows.push_back(exponential_precompose(diag_exp[tw.tgt], twist_exp[t], k.maps[tw.mor]));
  }
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
    const Arrow& a = shape->arrow(static_cast<int>(m));
    d.maps.push_back(shape->is_identity(static_cast<int>(m)) ? identity_map(d.values[a.src]) : arrows[(m - shape->num_objects())]);
  }
  EqualizerEnd out;
  out.limit = limit(d);
  // comparison: a natural map t |-> its components, plus the composites over each arrow
  for (int m = 0; m <= cap; ++m) {
    out.comparison.at.emplace_back();
    for (std::size_t t = 0; t < e.maps[m].size(); ++t) {
      std::vector<int> fam;
      for (std::size_t o = 0; o < c.num_objects(); ++o) {
        std::vector<int> flat(diag_exp[o].offset[m].back());
        for (int j = 0; j <= cap; ++j) {
          const std::size_t nb = count_monotone(j, m);
          for (std::size_t a = 0; a < k.values[o].count(j); ++a)
            for (std::size_t b = 0; b < nb; ++b)
              flat[diag_exp[o].offset[m][j] + a * nb + b] = e.eval(m, static_cast<int>(t), static_cast<int>(o), j, static_cast<int>(a), static_cast<int>(b));
        }
        fam.push_back(diag_exp[o].find(m, flat));
      }
      for (std::size_t w = 0; w < twists.size(); ++w) fam.push_back(arrows[2 * w].at[m][fam[twists[w].src]]);
      out.comparison.at[m].push_back(out.limit.at[m].find(fam));
    }
  }
  return out;
}

}  // namespace cosimplex
