#pragma once

#include <unordered_map>
#include <vector>

#include "delta.hpp"
#include "hashing.hpp"
#include "hom.hpp"
#include "sset.hpp"

namespace cosimplex {

/// Internal hom Map(K, X): its m-simplices are the maps K x Delta[m] -> X.
struct Exponential {
  TruncSSet value;
  std::vector<TruncSSet> sources;               ///< K x Delta[m]
  std::vector<std::vector<std::size_t>> offset;  ///< per m: flat offsets of the dimensions of sources[m]
  std::vector<std::vector<std::vector<int>>> maps;
  std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index;
  std::size_t delta_count(int m, int j) const { return sources[m].count(j) / k_count[j]; }
  std::vector<std::size_t> k_count;

  /// Value of the m-simplex f on the pair (a, b), a in K_j, b in Delta[m]_j.
  int eval(int m, int f, int j, int a, int b) const {
    return maps[m][f][offset[m][j] + static_cast<std::size_t>(a) * delta_count(m, j) + static_cast<std::size_t>(b)];
  }

  int find(int m, const std::vector<int>& flat) const {
    auto it = index[m].find(flat);
    return it == index[m].end() ? -1 : it->second;
  }

  SSetMap as_map(int m, int f, int cap) const { return unflatten_map(maps[m][f], offset[m], 0, cap); }
};

/// Table b |-> rank(theta . b) from Delta[dom theta]_j to Delta[cod theta]_j.
inline std::vector<int> postcompose_table(const MonotoneMap& theta, int j) {
  std::vector<int> t;
  for (auto& b : enumerate_monotone(j, theta.domain())) t.push_back(static_cast<int>(monotone_rank(compose(theta, b))));
  return t;
}

inline Exponential exponential(const TruncSSet& k, const TruncSSet& x) {
  if (k.cap() != x.cap()) throw std::invalid_argument("exponential: caps differ");
  const int cap = k.cap();
  Exponential e;
  e.value = TruncSSet(cap);
  for (int j = 0; j <= cap; ++j) e.k_count.push_back(k.count(j));
  auto ax = sset_algebra(x);
  for (int m = 0; m <= cap; ++m) {
    e.sources.push_back(product(k, standard_simplex(m, cap)));
    auto as = sset_algebra(e.sources[m]);
    HomSearch search(as, ax);
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
  auto reindex = [&](int m_from, int m_to, const MonotoneMap& theta) {
    // f in Map_{m_from} |-> f . (1 x theta_*), with theta : [m_to] -> [m_from]
    std::vector<int> table;
    std::vector<std::vector<int>> post(cap + 1);
    for (int j = 0; j <= cap; ++j) post[j] = postcompose_table(theta, j);
    std::vector<int> flat(e.offset[m_to].back());
    for (std::size_t f = 0; f < e.maps[m_from].size(); ++f) {
      for (int j = 0; j <= cap; ++j) {
        const std::size_t nb = e.delta_count(m_to, j);
        for (std::size_t a = 0; a < k.count(j); ++a)
          for (std::size_t b = 0; b < nb; ++b)
            flat[e.offset[m_to][j] + a * nb + b] = e.eval(m_from, static_cast<int>(f), j, static_cast<int>(a), post[j][b]);
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

/// Map(B, X) -> Map(A, X) induced by g : A -> B.
inline SSetMap exponential_precompose(const Exponential& eb, const Exponential& ea, const SSetMap& g) {
  const int cap = eb.value.cap();
  SSetMap out;
  for (int m = 0; m <= cap; ++m) {
    out.at.emplace_back();
    std::vector<int> flat(ea.offset[m].back());
    for (std::size_t f = 0; f < eb.maps[m].size(); ++f) {
      for (int j = 0; j <= cap; ++j) {
        const std::size_t nb = ea.delta_count(m, j);
        for (std::size_t a = 0; a < ea.k_count[j]; ++a)
          for (std::size_t b = 0; b < nb; ++b)
            flat[ea.offset[m][j] + a * nb + b] =
                eb.eval(m, static_cast<int>(f), j, g.at[j][a], static_cast<int>(b));
      }
      out.at[m].push_back(ea.find(m, flat));
    }
  }
  return out;
}

/// Map(K, X) -> Map(K, Y) induced by h : X -> Y.
inline SSetMap exponential_postcompose(const Exponential& ex, const Exponential& ey, const SSetMap& h) {
  const int cap = ex.value.cap();
  SSetMap out;
  for (int m = 0; m <= cap; ++m) {
    out.at.emplace_back();
    for (auto& f : ex.maps[m]) {
      std::vector<int> flat(f.size());
      for (int j = 0; j <= cap; ++j)
        for (std::size_t s = ex.offset[m][j]; s < ex.offset[m][j + 1]; ++s) flat[s] = h.at[j][f[s]];
      out.at[m].push_back(ey.find(m, flat));
    }
  }
  return out;
}

}  // namespace cosimplex
