#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fincat.hpp"
#include "hashing.hpp"
#include "hom.hpp"
#include "sset.hpp"
#include "union_find.hpp"

namespace cosimplex {

/// Functor from a finite category to finite sets.
struct SetDiagram {
  std::shared_ptr<const FinCat> shape;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<int>> maps;  ///< per morphism

  /// Empty string when functorial, otherwise the first defect.
  std::string defect() const {
    for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
      const Arrow& a = shape->arrow(static_cast<int>(m));
      if (maps[m].size() != sizes[a.src]) return "map " + std::to_string(m) + " has the wrong length";
      for (std::size_t x = 0; x < maps[m].size(); ++x) {
        int y = maps[m][x];
        if (y < 0 || static_cast<std::size_t>(y) >= sizes[a.tgt]) return "map " + std::to_string(m) + " out of range";
        if (shape->is_identity(static_cast<int>(m)) && y != static_cast<int>(x)) return "identity not preserved";
      }
    }
    std::string err;
    shape->for_each_composite([&](int g, int f, int gf) {
      if (!err.empty()) return;
      for (std::size_t x = 0; x < maps[f].size(); ++x)
        if (maps[g][maps[f][x]] != maps[gf][x]) err = "composition not preserved";
    });
    return err;
  }
};

/// Functor from a finite category to truncated simplicial sets.
struct SSetDiagram {
  std::shared_ptr<const FinCat> shape;
  std::vector<TruncSSet> values;
  std::vector<SSetMap> maps;  ///< per morphism
  int dim_cap = -1;           ///< needed when there are no values

  int cap() const { return dim_cap >= 0 ? dim_cap : values.empty() ? 0 : values[0].cap(); }

  SetDiagram at_dimension(int m) const {
    SetDiagram d{shape, {}, {}};
    for (auto& v : values) d.sizes.push_back(v.count(m));
    for (auto& f : maps) d.maps.push_back(f.at[m]);
    return d;
  }

  std::string defect() const {
    for (std::size_t m = 0; m < maps.size(); ++m) {
      const Arrow& a = shape->arrow(static_cast<int>(m));
      auto d = simplicial_map_defect(values[a.src], values[a.tgt], maps[m]);
      if (!d.empty()) return "map " + std::to_string(m) + ": " + d;
    }
    for (int m = 0; m <= cap(); ++m) {
      auto d = at_dimension(m).defect();
      if (!d.empty()) return "dimension " + std::to_string(m) + ": " + d;
    }
    return {};
  }
};

/// Compatible families, one element per object.
struct SetLimit {
  std::vector<std::vector<int>> families;
  std::unordered_map<std::vector<int>, int, VectorHash> index;

  int find(const std::vector<int>& fam) const {
    auto it = index.find(fam);
    return it == index.end() ? -1 : it->second;
  }
};

/// Limit of a set-valued diagram as the set of compatible families.
inline SetLimit limit(const SetDiagram& d) {
  static const std::vector<int> zero{0};
  const FinCat& c = *d.shape;
  Algebra src, tgt;
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    src.add_sort(1);
    tgt.add_sort(d.sizes[o]);
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const Arrow& a = c.arrow(static_cast<int>(m));
    if (c.is_identity(static_cast<int>(m))) continue;
    src.add_op(a.src, a.tgt, zero);
    tgt.add_op(a.src, a.tgt, d.maps[m]);
  }
  SetLimit lim;
  HomSearch search(src, tgt);
  search.for_each([&](const std::vector<int>& v) {
    lim.index.emplace(v, static_cast<int>(lim.families.size()));
    lim.families.push_back(v);
    return true;
  });
  return lim;
}

struct SSetLimit {
  TruncSSet value;
  std::vector<SetLimit> at;  ///< families per dimension

  SSetMap projection(int object) const {
    SSetMap p;
    for (auto& l : at) {
      p.at.emplace_back();
      for (auto& f : l.families) p.at.back().push_back(f[object]);
    }
    return p;
  }
};

/// Limit of a diagram of truncated simplicial sets, computed dimensionwise.
inline SSetLimit limit(const SSetDiagram& d) {
  const int cap = d.cap();
  SSetLimit lim;
  lim.value = TruncSSet(cap);
  for (int m = 0; m <= cap; ++m) {
    lim.at.push_back(limit(d.at_dimension(m)));
    lim.value.set_count(m, lim.at[m].families.size());
  }
  const std::size_t nobj = d.values.size();
  std::vector<int> fam(nobj);
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = lim.value.face_table(m, i);
      for (auto& f : lim.at[m].families) {
        for (std::size_t o = 0; o < nobj; ++o) fam[o] = d.values[o].face(m, i, f[o]);
        t.push_back(lim.at[m - 1].find(fam));
      }
    }
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = lim.value.degen_table(m, i);
      for (auto& f : lim.at[m].families) {
        for (std::size_t o = 0; o < nobj; ++o) fam[o] = d.values[o].degen(m, i, f[o]);
        t.push_back(lim.at[m + 1].find(fam));
      }
    }
  return lim;
}

struct SetColimit {
  std::size_t size = 0;
  std::vector<std::vector<int>> injection;  ///< per object
};

inline SetColimit colimit(const SetDiagram& d) {
  const FinCat& c = *d.shape;
  std::vector<std::size_t> offset(c.num_objects() + 1, 0);
  for (std::size_t o = 0; o < c.num_objects(); ++o) offset[o + 1] = offset[o] + d.sizes[o];
  UnionFind uf(offset.back());
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const Arrow& a = c.arrow(static_cast<int>(m));
    for (std::size_t x = 0; x < d.maps[m].size(); ++x)
      uf.unite(offset[a.src] + x, offset[a.tgt] + static_cast<std::size_t>(d.maps[m][x]));
  }
  int count = 0;
  auto cls = uf.classes(&count);
  SetColimit col;
  col.size = static_cast<std::size_t>(count);
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    col.injection.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(offset[o]),
                               cls.begin() + static_cast<std::ptrdiff_t>(offset[o + 1]));
  return col;
}

struct SSetColimit {
  TruncSSet value;
  std::vector<SSetMap> injection;  ///< per object
};

/// Colimit of a diagram of truncated simplicial sets, computed dimensionwise.
inline SSetColimit colimit(const SSetDiagram& d) {
  const int cap = d.cap();
  const std::size_t nobj = d.values.size();
  SSetColimit col{TruncSSet(cap), std::vector<SSetMap>(nobj)};
  std::vector<std::vector<std::pair<int, int>>> rep(cap + 1);  // class -> (object, simplex)
  for (int m = 0; m <= cap; ++m) {
    auto c = colimit(d.at_dimension(m));
    col.value.set_count(m, c.size);
    rep[m].assign(c.size, {-1, -1});
    for (std::size_t o = 0; o < nobj; ++o) {
      for (std::size_t x = 0; x < c.injection[o].size(); ++x)
        if (rep[m][c.injection[o][x]].first < 0) rep[m][c.injection[o][x]] = {static_cast<int>(o), static_cast<int>(x)};
      col.injection[o].at.push_back(std::move(c.injection[o]));
    }
  }
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i)
      for (auto [o, x] : rep[m]) col.value.face_table(m, i).push_back(col.injection[o].at[m - 1][d.values[o].face(m, i, x)]);
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i)
      for (auto [o, x] : rep[m]) col.value.degen_table(m, i).push_back(col.injection[o].at[m + 1][d.values[o].degen(m, i, x)]);
  return col;
}

struct Pullback {
  TruncSSet value;
  std::vector<std::vector<std::pair<int, int>>> pairs;  ///< per dimension
  SSetMap first, second;

  int find(int m, int a, int b) const {
    auto it = index[m].find(key(a, b));
    return it == index[m].end() ? -1 : it->second;
  }

  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }
  std::vector<std::unordered_map<std::uint64_t, int>> index;
};

/// A x_Z B for f : A -> Z and g : B -> Z.
inline Pullback pullback(const TruncSSet& a, const SSetMap& f, const TruncSSet& b, const SSetMap& g, const TruncSSet& z) {
  const int cap = a.cap();
  Pullback p;
  p.value = TruncSSet(cap);
  p.pairs.resize(cap + 1);
  p.index.resize(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    std::vector<std::vector<int>> fiber(z.count(m));
    for (std::size_t y = 0; y < b.count(m); ++y) fiber[g.at[m][y]].push_back(static_cast<int>(y));
    for (std::size_t x = 0; x < a.count(m); ++x)
      for (int y : fiber[f.at[m][x]]) {
        p.index[m][Pullback::key(static_cast<int>(x), y)] = static_cast<int>(p.pairs[m].size());
        p.pairs[m].emplace_back(static_cast<int>(x), y);
      }
    p.value.set_count(m, p.pairs[m].size());
    p.first.at.emplace_back();
    p.second.at.emplace_back();
    for (auto [x, y] : p.pairs[m]) {
      p.first.at[m].push_back(x);
      p.second.at[m].push_back(y);
    }
  }
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i)
      for (auto [x, y] : p.pairs[m]) p.value.face_table(m, i).push_back(p.find(m - 1, a.face(m, i, x), b.face(m, i, y)));
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i)
      for (auto [x, y] : p.pairs[m]) p.value.degen_table(m, i).push_back(p.find(m + 1, a.degen(m, i, x), b.degen(m, i, y)));
  return p;
}

/// The cospan shape 0 -> 2 <- 1.
inline std::shared_ptr<const FinCat> cospan_shape() {
  auto c = std::make_shared<FinCat>();
  c->add_object("a");
  c->add_object("b");
  c->add_object("z");
  c->add_morphism(0, 2);
  c->add_morphism(1, 2);
  return c;
}

/// The cospan a -f-> z <-g- b as a diagram on cospan_shape().
inline SSetDiagram cospan_diagram(const TruncSSet& a, const SSetMap& f, const TruncSSet& b, const SSetMap& g, const TruncSSet& z) {
  SSetDiagram d{cospan_shape(), {a, b, z}, {}};
  d.maps.resize(5);
  for (int o = 0; o < 3; ++o) d.maps[d.shape->identity(o)] = identity_map(d.values[o]);
  d.maps[3] = f;
  d.maps[4] = g;
  return d;
}

/// Functor between finite categories given by its object and morphism maps.
struct FunctorData {
  const FinCat* source;
  const FinCat* target;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};

/// Inclusion of a full subcategory on the listed objects.
struct FullInclusion {
  std::shared_ptr<FinCat> sub;
  FunctorData functor;
};

inline FullInclusion full_inclusion(const FinCat& big, const std::vector<int>& objects) {
  FullInclusion inc;
  std::vector<int> mor;
  inc.sub = std::make_shared<FinCat>(big.full_subcategory(objects, &mor));
  inc.functor = {inc.sub.get(), &big, objects, mor};
  return inc;
}

/// Overcategory (F | beta): objects (a, g : F a -> beta), arrows h : a -> a' with g' . F h = g.
struct FunctorOvercategory {
  FinCat cat;
  std::vector<std::pair<int, int>> objects;  ///< (source object, target morphism)
};

inline FunctorOvercategory functor_overcategory(const FunctorData& f, int beta) {
  FunctorOvercategory oc;
  std::vector<std::vector<int>> preimage(f.target->num_objects());
  for (std::size_t a = 0; a < f.on_objects.size(); ++a) preimage[f.on_objects[a]].push_back(static_cast<int>(a));
  std::unordered_map<std::uint64_t, int> id;
  for (int g : f.target->in(beta))
    for (int a : preimage[f.target->arrow(g).src]) {
      int o = oc.cat.add_object();
      id[FinCat::key(a, g)] = o;
      oc.objects.emplace_back(a, g);
    }
  std::map<std::tuple<int, int, int>, int> arrow_of;  // (source object, h, target object) -> arrow
  std::vector<std::vector<std::pair<int, int>>> out(oc.objects.size());  // per object: (h, arrow)
  for (std::size_t o = 0; o < oc.objects.size(); ++o) {
    auto [a, g] = oc.objects[o];
    for (int h : f.source->out(a)) {
      if (f.source->is_identity(h)) continue;
      int a2 = f.source->arrow(h).tgt;
      for (int g2 : f.target->in(beta)) {
        auto it = id.find(FinCat::key(a2, g2));
        if (it == id.end()) continue;
        if (f.target->compose(g2, f.on_morphisms[h]) != g) continue;
        int arr = oc.cat.add_morphism(static_cast<int>(o), it->second);
        arrow_of[{static_cast<int>(o), h, it->second}] = arr;
        out[o].emplace_back(h, arr);
      }
    }
  }
  // Composition follows the source category.
  for (std::size_t o = 0; o < oc.objects.size(); ++o)
    for (auto [h, a1] : out[o]) {
      int mid = oc.cat.arrow(a1).tgt;
      for (auto [h2, a2] : out[mid]) {
        int t = oc.cat.arrow(a2).tgt;
        int hh = f.source->compose(h2, h);
        int comp = f.source->is_identity(hh) ? oc.cat.identity(static_cast<int>(o))
                                             : arrow_of.at({static_cast<int>(o), hh, t});
        oc.cat.set_composite(a2, a1, comp);
      }
    }
  return oc;
}

struct CofinalityReport {
  bool cofinal = true;
  std::vector<int> failing;           ///< target objects whose overcategory is empty or disconnected
  std::vector<int> terminal_witness;  ///< per target object: overcategory object index of a terminal object, or -1
  std::vector<FunctorOvercategory> overcategories;
};

inline bool overcategory_connected(const FinCat& c) {
  if (c.num_objects() == 0) return false;
  UnionFind uf(c.num_objects());
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) uf.unite(c.arrow(static_cast<int>(m)).src, c.arrow(static_cast<int>(m)).tgt);
  int count = 0;
  uf.classes(&count);
  return count == 1;
}

/// Object with exactly one arrow in from every object, or -1.
inline int find_terminal(const FinCat& c) {
  for (std::size_t t = 0; t < c.num_objects(); ++t) {
    std::vector<int> hits(c.num_objects(), 0);
    for (int m : c.in(static_cast<int>(t))) ++hits[c.arrow(m).src];
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return static_cast<int>(t);
  }
  return -1;
}

/// Left cofinality: every overcategory (F | beta) is nonempty and connected.
inline CofinalityReport is_left_cofinal(const FunctorData& f, bool keep_overcategories = false) {
  CofinalityReport r;
  for (std::size_t b = 0; b < f.target->num_objects(); ++b) {
    auto oc = functor_overcategory(f, static_cast<int>(b));
    bool ok = overcategory_connected(oc.cat);
    r.terminal_witness.push_back(find_terminal(oc.cat));
    if (!ok) {
      r.cofinal = false;
      r.failing.push_back(static_cast<int>(b));
    }
    if (keep_overcategories) r.overcategories.push_back(std::move(oc));
  }
  return r;
}

/// Restriction of a diagram along a functor.
inline SSetDiagram restrict_diagram(const SSetDiagram& d, const FunctorData& f, std::shared_ptr<const FinCat> shape) {
  SSetDiagram r{std::move(shape), {}, {}};
  for (int o : f.on_objects) r.values.push_back(d.values[o]);
  for (int m : f.on_morphisms) r.maps.push_back(d.maps[m]);
  return r;
}

}  // namespace cosimplex
