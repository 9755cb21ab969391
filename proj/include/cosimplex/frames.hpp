#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "categories.hpp"
#include "diagrams.hpp"
#include "ends.hpp"
#include "exponential.hpp"
#include "reedy.hpp"

namespace cosimplex {

/// Standard frame on X: Map(Delta[m], X) for m <= cap, with the maps induced by operators.
struct StandardFrame {
  std::vector<Exponential> levels;

  /// theta : [m] -> [k] gives Map(Delta[k], X) -> Map(Delta[m], X).
  SSetMap induced(const MonotoneMap& theta) const {
    const int cap = levels[0].value.cap();
    return exponential_precompose(levels[theta.codomain()], levels[theta.domain()], standard_simplex_map(theta, cap));
  }
};

inline StandardFrame standard_frame(const TruncSSet& x) {
  StandardFrame f;
  for (int m = 0; m <= x.cap(); ++m) f.levels.push_back(exponential(standard_simplex(m, x.cap()), x));
  return f;
}

/// Limit over the opposite of the category of simplices of K of (m, y) |-> Map(Delta[m], X).
struct HomotopyCotensor {
  SSetLimit limit;
  SimplexCategory simplices;
  SSetMap comparison;  ///< exponential(K, X) -> limit
};

inline HomotopyCotensor homotopy_cotensor(const TruncSSet& x, const TruncSSet& k, const StandardFrame& frame, const Exponential& expo) {
  const int cap = x.cap();
  HomotopyCotensor hc;
  hc.simplices = category_of_simplices(k);
  auto shape = std::make_shared<FinCat>(hc.simplices.cat.opposite());
  SSetDiagram d{shape, {}, {}, cap};
  for (auto [m, y] : hc.simplices.objects) d.values.push_back(frame.levels[m].value);
  std::unordered_map<MonotoneMap, SSetMap, MonotoneMapHash> cache;
  for (std::size_t a = 0; a < shape->num_morphisms(); ++a) {
    const auto& theta = hc.simplices.arrow_label[a];
    if (shape->arrow(static_cast<int>(a)).src != hc.simplices.cat.arrow(static_cast<int>(a)).tgt)
      throw std::logic_error("homotopy_cotensor: opposite category renumbered arrows");
    auto it = cache.find(theta);
    if (it == cache.end()) it = cache.emplace(theta, frame.induced(theta)).first;
    d.maps.push_back(it->second);
  }
  hc.limit = limit(d);
  // f : K x Delta[j] -> X goes to the family f . (chi_y x 1) over the simplices y of K
  std::vector<SSetMap> chi;
  for (auto [m, y] : hc.simplices.objects) chi.push_back(classifying_map(k, m, y));
  std::vector<int> fam(hc.simplices.objects.size());
  for (int j = 0; j <= cap; ++j) {
    hc.comparison.at.emplace_back();
    for (std::size_t f = 0; f < expo.maps[j].size(); ++f) {
      for (std::size_t o = 0; o < hc.simplices.objects.size(); ++o) {
        const int m = hc.simplices.objects[o].first;
        const auto& lvl = frame.levels[m];
        std::vector<int> flat(lvl.offset[j].back());
        for (int i = 0; i <= cap; ++i) {
          const std::size_t nb = count_monotone(i, j);
          for (std::size_t a = 0; a < count_monotone(i, m); ++a)
            for (std::size_t b = 0; b < nb; ++b)
              flat[lvl.offset[j][i] + a * nb + b] = expo.eval(j, static_cast<int>(f), i, chi[o].at[i][a], static_cast<int>(b));
        }
        fam[o] = lvl.find(j, flat);
      }
      hc.comparison.at[j].push_back(hc.limit.at[j].find(fam));
    }
  }
  return hc;
}

inline HomotopyCotensor homotopy_cotensor(const TruncSSet& x, const TruncSSet& k) {
  return homotopy_cotensor(x, k, standard_frame(x), exponential(k, x));
}

/// m-simplices are maps W -> Map(Delta[m], X), faces and degeneracies from the frame.
struct MappingComplex {
  TruncSSet value;
  std::vector<std::vector<SSetMap>> maps;  ///< per m
  SSetMap comparison;                      ///< exponential(W, X) -> value
};

inline MappingComplex mapping_complex(const TruncSSet& w, const TruncSSet& x, const StandardFrame& frame, const Exponential& expo) {
  const int cap = x.cap();
  MappingComplex mc;
  mc.value = TruncSSet(cap);
  std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index(cap + 1);
  auto flatten = [](const SSetMap& f) {
    std::vector<int> v;
    for (auto& a : f.at) v.insert(v.end(), a.begin(), a.end());
    return v;
  };
  for (int m = 0; m <= cap; ++m) {
    mc.maps.push_back(enumerate_maps(w, frame.levels[m].value));
    for (std::size_t i = 0; i < mc.maps[m].size(); ++i) index[m].emplace(flatten(mc.maps[m][i]), static_cast<int>(i));
    mc.value.set_count(m, mc.maps[m].size());
  }
  auto reindex = [&](int from, int to, const MonotoneMap& theta) {
    auto g = frame.induced(theta);
    std::vector<int> t;
    for (auto& f : mc.maps[from]) t.push_back(index[to].at(flatten(compose(g, f))));
    return t;
  };
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) mc.value.face_table(m, i) = reindex(m, m - 1, MonotoneMap::coface(m, i));
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) mc.value.degen_table(m, i) = reindex(m, m + 1, MonotoneMap::codegeneracy(m, i));
  // f : W x Delta[m] -> X goes to w |-> ((a, b) |-> f(b^* w, a)) for w of dimension j
  for (int m = 0; m <= cap; ++m) {
    mc.comparison.at.emplace_back();
    const auto& lvl = frame.levels[m];
    for (std::size_t f = 0; f < expo.maps[m].size(); ++f) {
      SSetMap g;
      for (int j = 0; j <= cap; ++j) {
        g.at.emplace_back();
        auto bs_all = std::vector<std::vector<MonotoneMap>>(cap + 1);
        for (int i = 0; i <= cap; ++i) bs_all[i] = enumerate_monotone(i, j);
        for (std::size_t s = 0; s < w.count(j); ++s) {
          std::vector<int> flat(lvl.offset[j].back());
          for (int i = 0; i <= cap; ++i) {
            const std::size_t nb = bs_all[i].size();
            for (std::size_t a = 0; a < count_monotone(i, m); ++a)
              for (std::size_t b = 0; b < nb; ++b)
                flat[lvl.offset[j][i] + a * nb + b] =
                    expo.eval(m, static_cast<int>(f), i, w.act(bs_all[i][b], static_cast<int>(s)), static_cast<int>(a));
          }
          g.at[j].push_back(lvl.find(j, flat));
        }
      }
      auto it = index[m].find(flatten(g));
      mc.comparison.at[m].push_back(it == index[m].end() ? -1 : it->second);
    }
  }
  return mc;
}

inline MappingComplex mapping_complex(const TruncSSet& w, const TruncSSet& x) {
  return mapping_complex(w, x, standard_frame(x), exponential(w, x));
}

/// Maps K -> map(W, X) against maps W -> X^K (the cotensor limit), both sent to their adjoint
/// K x W -> X.
struct SetBijectionVerdict {
  bool passed = true;
  std::size_t left = 0, right = 0, joint = 0;
  std::string detail;
};

inline SetBijectionVerdict check_cotensor_adjunction(const TruncSSet& k, const TruncSSet& w, const TruncSSet& x) {
  const int cap = x.cap();
  auto frame = standard_frame(x);
  auto mc = mapping_complex(w, x, frame, exponential(w, x));
  auto hc = homotopy_cotensor(x, k, frame, exponential(k, x));
  auto kw = product(k, w);
  auto joint = enumerate_maps(kw, x);
  std::unordered_map<std::vector<int>, int, VectorHash> joint_index;
  auto flatten = [](const SSetMap& f) {
    std::vector<int> v;
    for (auto& a : f.at) v.insert(v.end(), a.begin(), a.end());
    return v;
  };
  for (std::size_t i = 0; i < joint.size(); ++i) joint_index.emplace(flatten(joint[i]), static_cast<int>(i));
  SetBijectionVerdict v;
  v.joint = joint.size();
  // rank of the identity of [j] among maps [j] -> [j]
  auto top = [](int j) { return static_cast<int>(monotone_rank(MonotoneMap::identity(j))); };
  auto check_side = [&](const std::vector<SSetMap>& maps, auto&& adjoint, std::size_t& count) {
    std::vector<char> hit(joint.size(), 0);
    count = maps.size();
    for (auto& phi : maps) {
      SSetMap f;
      for (int j = 0; j <= cap; ++j) {
        f.at.emplace_back(kw.count(j));
        const std::size_t nw = w.count(j);
        for (std::size_t a = 0; a < k.count(j); ++a)
          for (std::size_t b = 0; b < nw; ++b) f.at[j][a * nw + b] = adjoint(phi, j, static_cast<int>(a), static_cast<int>(b));
      }
      auto it = joint_index.find(flatten(f));
      if (it == joint_index.end() || hit[it->second]) return false;
      hit[it->second] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  };
  // left: phi : K -> map(W, X); phi(a) is W -> Map(Delta[j], X); evaluate at (id, id)
  auto left = enumerate_maps(k, mc.value);
  bool ok_left = check_side(
      left,
      [&](const SSetMap& phi, int j, int a, int b) {
        const auto& g = mc.maps[j][phi.at[j][a]];
        const int e = g.at[j][b];
        return frame.levels[j].eval(j, e, j, top(j), top(j));
      },
      v.left);
  // right: psi : W -> X^K; psi(b) is a family over simplices of K; take the entry at (j, a)
  std::vector<int> obj_of(hc.simplices.objects.size());
  std::vector<std::vector<int>> object_id(cap + 1);
  for (int j = 0; j <= cap; ++j) object_id[j].assign(k.count(j), -1);
  for (std::size_t o = 0; o < hc.simplices.objects.size(); ++o) object_id[hc.simplices.objects[o].first][hc.simplices.objects[o].second] = static_cast<int>(o);
  auto right = enumerate_maps(w, hc.limit.value);
  bool ok_right = check_side(
      right,
      [&](const SSetMap& psi, int j, int a, int b) {
        const auto& fam = hc.limit.at[j].families[psi.at[j][b]];
        const int e = fam[object_id[j][a]];
        return frame.levels[j].eval(j, e, j, top(j), top(j));
      },
      v.right);
  v.passed = ok_left && ok_right && v.left == v.right;
  if (!v.passed)
    v.detail = std::to_string(v.left) + " maps into the mapping complex, " + std::to_string(v.right) +
               " into the cotensor, " + std::to_string(v.joint) + " out of the product";
  return v;
}

/// Maps W -> end(K, X) against natural maps K -> Map(W, X), both sent to natural maps W x K -> X.
inline SetBijectionVerdict check_end_adjunction(const SSetDiagram& k, const SSetDiagram& x, const TruncSSet& w) {
  const int cap = k.cap();
  auto pk = presentation(k), px = presentation(x);
  auto e = end_hom(pk, px);
  // Map(W, X) as a diagram
  Presentation mw{cap, {}, {}};
  std::vector<Exponential> ex;
  for (auto& v : x.values) {
    ex.push_back(exponential(w, v));
    mw.values.push_back(ex.back().value);
  }
  for (auto& edge : px.edges) mw.edges.push_back({edge.src, edge.tgt, exponential_postcompose(ex[edge.src], ex[edge.tgt], edge.map)});
  std::vector<std::size_t> off_right, off_joint;
  auto right = all_natural_maps(pk, mw, &off_right);
  auto wk = product_with(pk, w);
  auto joint = all_natural_maps(wk, px, &off_joint);
  std::unordered_map<std::vector<int>, int, VectorHash> joint_index;
  for (std::size_t i = 0; i < joint.size(); ++i) joint_index.emplace(joint[i], static_cast<int>(i));
  SetBijectionVerdict v;
  v.joint = joint.size();
  const int per = cap + 1;
  auto top = [](int j) { return static_cast<int>(monotone_rank(MonotoneMap::identity(j))); };
  auto finish = [&](std::vector<std::vector<int>>& images, std::size_t& count) {
    count = images.size();
    std::vector<char> hit(joint.size(), 0);
    for (auto& f : images) {
      auto it = joint_index.find(f);
      if (it == joint_index.end() || hit[it->second]) return false;
      hit[it->second] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  };
  // left: g : W -> end; g(b) is a natural map K x Delta[j] -> X; evaluate at (a, id)
  auto left = enumerate_maps(w, e.value);
  std::vector<std::vector<int>> left_images;
  for (auto& g : left) {
    std::vector<int> flat(off_joint.back());
    for (std::size_t o = 0; o < k.values.size(); ++o)
      for (int j = 0; j <= cap; ++j) {
        const std::size_t nw = w.count(j);
        for (std::size_t a = 0; a < k.values[o].count(j); ++a)
          for (std::size_t b = 0; b < nw; ++b)
            flat[off_joint[o * per + j] + a * nw + b] = e.eval(j, g.at[j][b], static_cast<int>(o), j, static_cast<int>(a), top(j));
      }
    left_images.push_back(std::move(flat));
  }
  // right: h : K -> Map(W, X); h(a) is W x Delta[j] -> X_o; evaluate at (b, id)
  std::vector<std::vector<int>> right_images;
  for (auto& h : right) {
    std::vector<int> flat(off_joint.back());
    for (std::size_t o = 0; o < k.values.size(); ++o)
      for (int j = 0; j <= cap; ++j) {
        const std::size_t nw = w.count(j);
        for (std::size_t a = 0; a < k.values[o].count(j); ++a) {
          const int f = h[off_right[o * per + j] + a];
          for (std::size_t b = 0; b < nw; ++b) flat[off_joint[o * per + j] + a * nw + b] = ex[o].eval(j, f, j, static_cast<int>(b), top(j));
        }
      }
    right_images.push_back(std::move(flat));
  }
  bool ok_left = finish(left_images, v.left);
  bool ok_right = finish(right_images, v.right);
  v.passed = ok_left && ok_right;
  if (!v.passed)
    v.detail = std::to_string(v.left) + " maps into the end, " + std::to_string(v.right) + " natural maps into Map(W, X), " +
               std::to_string(v.joint) + " natural maps out of W x K";
  return v;
}

/// The standard frame of a diagonal is the diagonal of the standard frame: for each m, the
/// objectwise Map(Delta[m], -) commutes with restriction along the diagonal.
inline MultiCosimplicial frame_level(const MultiCosimplicial& x, int m) {
  std::vector<Exponential> ex;
  for (auto& v : x.values()) ex.push_back(exponential(standard_simplex(m, x.cap()), v));
  return MultiCosimplicial::build(
      x.arity(), x.trunc(), x.cap(), [&](const std::vector<int>& p) { return ex[x.object(p)].value; },
      [&](const MultiMap& a) {
        return exponential_postcompose(ex[x.object(a.domain())], ex[x.object(a.codomain())], x.structure_map(a));
      });
}

}  // namespace cosimplex
