#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cosimplicial.hpp"
#include "diagrams.hpp"
#include "kan.hpp"
#include "matching.hpp"

namespace cosimplex {

/// X restricted to a set of objects of a matching category: alpha |-> X(cod alpha).
inline SSetDiagram matching_diagram(const MultiCosimplicial& x, const MatchingCategory& mc, const std::vector<int>& objects) {
  std::vector<int> emb;
  auto shape = std::make_shared<FinCat>(mc.category().full_subcategory(objects, &emb));
  SSetDiagram d{shape, {}, {}, x.cap()};
  for (int o : objects) d.values.push_back(x.value(mc.object(o).codomain()));
  std::unordered_map<MultiMap, SSetMap, MultiMapHash> cache;
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
    const Arrow& a = shape->arrow(static_cast<int>(m));
    if (shape->is_identity(static_cast<int>(m))) {
      d.maps.push_back(identity_map(d.values[a.src]));
      continue;
    }
    auto e = mc.connecting(objects[a.src], objects[a.tgt]);
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, x.structure_map(e)).first;
    d.maps.push_back(it->second);
  }
  return d;
}

inline std::vector<int> all_objects(const MatchingCategory& mc) {
  std::vector<int> v(mc.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

/// Limit of X over the given matching-category objects with the canonical map out of X(at).
struct MatchingObject {
  std::vector<int> objects;
  SSetLimit limit;
  SSetMap matching_map;
};

inline MatchingObject matching_object(const MultiCosimplicial& x, const MatchingCategory& mc, const std::vector<int>& objects) {
  MatchingObject mo{objects, limit(matching_diagram(x, mc, objects)), {}};
  const auto& src = x.value(mc.at());
  std::vector<SSetMap> legs;
  for (int o : objects) legs.push_back(x.structure_map(mc.object(o)));
  std::vector<int> fam(objects.size());
  for (int m = 0; m <= x.cap(); ++m) {
    mo.matching_map.at.emplace_back();
    for (std::size_t s = 0; s < src.count(m); ++s) {
      for (std::size_t j = 0; j < objects.size(); ++j) fam[j] = legs[j].at[m][s];
      mo.matching_map.at[m].push_back(mo.limit.at[m].find(fam));
    }
  }
  return mo;
}

inline MatchingObject matching_object(const MultiCosimplicial& x, const std::vector<int>& at) {
  if (*std::max_element(at.begin(), at.end()) > x.trunc()) throw std::out_of_range("matching object: degree above the truncation");
  MatchingCategory mc(at);
  return matching_object(x, mc, all_objects(mc));
}

/// Map of limits induced by a natural transformation.
inline SSetMap induced_on_limits(const MatchingObject& a, const MatchingObject& b, const MatchingCategory& mc,
                                 const MultiCosimplicial& x, const MultiMorphism& f) {
  SSetMap g;
  std::vector<int> fam(a.objects.size());
  for (int m = 0; m <= x.cap(); ++m) {
    g.at.emplace_back();
    for (auto& af : a.limit.at[m].families) {
      for (std::size_t j = 0; j < a.objects.size(); ++j)
        fam[j] = f.at[x.object(mc.object(a.objects[j]).codomain())].at[m][af[j]];
      g.at[m].push_back(b.limit.at[m].find(fam));
    }
  }
  return g;
}

/// Y(at) x_{M Y} M X with the relative matching map out of X(at).
struct RelativeMatching {
  std::vector<int> at;
  std::vector<int> objects;
  MatchingObject mx, my;
  SSetMap induced;  ///< M f : M X -> M Y
  Pullback P;
  SSetMap relative_map;
};

inline RelativeMatching relative_matching(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f,
                                          const MatchingCategory& mc, const std::vector<int>& objects) {
  RelativeMatching r;
  r.at = mc.at();
  r.objects = objects;
  r.mx = matching_object(x, mc, objects);
  r.my = matching_object(y, mc, objects);
  r.induced = induced_on_limits(r.mx, r.my, mc, x, f);
  const int o = x.object(mc.at());
  r.P = pullback(y.value(o), r.my.matching_map, r.mx.limit.value, r.induced, r.my.limit.value);
  for (int m = 0; m <= x.cap(); ++m) {
    r.relative_map.at.emplace_back();
    for (std::size_t s = 0; s < x.value(o).count(m); ++s)
      r.relative_map.at[m].push_back(r.P.find(m, f.at[o].at[m][s], r.mx.matching_map.at[m][s]));
  }
  return r;
}

/// Restriction P(big) -> P(small) for nested object sets at the same degree.
inline SSetMap restrict_relative(const RelativeMatching& big, const RelativeMatching& small) {
  std::vector<int> pos;
  for (int o : small.objects) {
    auto it = std::find(big.objects.begin(), big.objects.end(), o);
    if (it == big.objects.end()) throw std::invalid_argument("restriction: object sets are not nested");
    pos.push_back(static_cast<int>(it - big.objects.begin()));
  }
  SSetMap g;
  std::vector<int> fam(pos.size());
  for (std::size_t m = 0; m < big.P.pairs.size(); ++m) {
    g.at.emplace_back();
    for (auto [y, a] : big.P.pairs[m]) {
      const auto& af = big.mx.limit.at[m].families[a];
      for (std::size_t j = 0; j < pos.size(); ++j) fam[j] = af[pos[j]];
      g.at[m].push_back(small.P.find(static_cast<int>(m), y, small.mx.limit.at[m].find(fam)));
    }
  }
  return g;
}

enum class PVariant { full, diagonal, stage };

/// P at the diagonal degree k over the full matching category, its diagonal image, or stage i.
inline RelativeMatching build_P(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f, int k,
                                PVariant variant, int i = 0) {
  if (k > x.trunc()) throw std::out_of_range("build_P: degree above the truncation");
  MatchingCategory mc(x.arity(), k);
  switch (variant) {
    case PVariant::full: return relative_matching(x, y, f, mc, all_objects(mc));
    case PVariant::diagonal: return relative_matching(x, y, f, mc, filtration_stage(mc, -1));
    case PVariant::stage: return relative_matching(x, y, f, mc, filtration_stage(mc, i));
  }
  throw std::logic_error("unreachable");
}

/// P over the matching category of Delta at [k] for the diagonals, computed without reference
/// to the n-fold structure.
inline RelativeMatching build_P_of_diagonal(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f, int k) {
  auto dx = diagonal(x), dy = diagonal(y);
  auto df = diagonal(f, x);
  MatchingCategory mc(std::vector<int>{k});
  return relative_matching(dx, dy, df, mc, all_objects(mc));
}

struct IsoVerdict {
  bool passed = true;
  std::string detail;
};

/// Bijective in every dimension and simplicial.
inline IsoVerdict check_isomorphism(const TruncSSet& a, const TruncSSet& b, const SSetMap& f) {
  auto d = simplicial_map_defect(a, b, f);
  if (!d.empty()) return {false, d};
  for (int m = 0; m <= a.cap(); ++m)
    if (a.count(m) != b.count(m)) return {false, "dimension " + std::to_string(m) + ": " + std::to_string(a.count(m)) + " vs " + std::to_string(b.count(m)) + " simplices"};
  if (!is_bijective(f, b)) return {false, "not a bijection"};
  return {};
}

/// P over C'_{i+1} against P_i, plus the cofinality of C_i in C'_{i+1}.
struct PrimeStageVerdict {
  IsoVerdict iso;
  CofinalityReport cofinality;
  std::size_t prime_objects = 0, stage_objects = 0;
};

/// Cofinality of the stage C_i in the primed stage C'_{i+1}, with terminal witnesses.
inline CofinalityReport stage_cofinality(const MatchingCategory& mc, int i) {
  auto prime = prime_stage(mc, i);
  auto stage = filtration_stage(mc, i);
  auto big = full_inclusion(mc.category(), prime);
  std::vector<int> pos;
  for (int o : stage) pos.push_back(static_cast<int>(std::lower_bound(prime.begin(), prime.end(), o) - prime.begin()));
  auto small = full_inclusion(*big.sub, pos);
  return is_left_cofinal(small.functor);
}

inline PrimeStageVerdict check_prime_stage_iso(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f, int k, int i) {
  MatchingCategory mc(x.arity(), k);
  auto prime = prime_stage(mc, i);
  auto stage = filtration_stage(mc, i);
  PrimeStageVerdict v;
  v.prime_objects = prime.size();
  v.stage_objects = stage.size();
  auto pp = relative_matching(x, y, f, mc, prime);
  auto ps = relative_matching(x, y, f, mc, stage);
  v.iso = check_isomorphism(pp.P.value, ps.P.value, restrict_relative(pp, ps));
  v.cofinality = stage_cofinality(mc, i);
  return v;
}

/// The limit over C_{i+1} against the pullback of the limit over C'_{i+1} and the values at
/// T_{i+1} over their matching objects. Compared element-wise: every family maps into the
/// pullback, the map is injective, and the cardinalities agree.
struct PullbackSquareVerdict {
  bool passed = true;
  std::string detail;
  std::size_t t_objects = 0;
  std::vector<std::size_t> sizes;  ///< per dimension
};

inline PullbackSquareVerdict check_pullback_square(const MultiCosimplicial& x, int k, int i) {
  MatchingCategory mc(x.arity(), k);
  auto next = filtration_stage(mc, i + 1);
  auto prime = prime_stage(mc, i);
  auto split = split_new_objects(mc, i);
  PullbackSquareVerdict v;
  v.t_objects = split.T.size();
  auto lim_next = limit(matching_diagram(x, mc, next));
  auto lim_prime = limit(matching_diagram(x, mc, prime));
  auto pos_in = [](const std::vector<int>& v2, int o) { return static_cast<int>(std::lower_bound(v2.begin(), v2.end(), o) - v2.begin()); };
  // For each T object alpha : [k]^n -> p: the matching category at p, and for each of its
  // objects e the position of e . alpha in the primed stage.
  struct TData {
    int pos_next;
    std::unique_ptr<MatchingCategory> mcp;
    MatchingObject mo;
    std::vector<int> prime_pos;
  };
  std::vector<TData> ts;
  for (int t : split.T) {
    const auto& alpha = mc.object(t);
    TData d{pos_in(next, t), std::make_unique<MatchingCategory>(alpha.codomain()), {}, {}};
    d.mo = matching_object(x, *d.mcp, all_objects(*d.mcp));
    for (auto& e : d.mcp->objects()) {
      int o = mc.find(compose(e, alpha));
      auto it = std::lower_bound(prime.begin(), prime.end(), o);
      if (o < 0 || it == prime.end() || *it != o) {
        v.passed = false;
        v.detail = "composite " + to_string(compose(e, alpha)) + " is not in the primed stage";
        return v;
      }
      d.prime_pos.push_back(static_cast<int>(it - prime.begin()));
    }
    ts.push_back(std::move(d));
  }
  std::vector<int> prime_pos_in_next;
  for (int o : prime) prime_pos_in_next.push_back(pos_in(next, o));
  for (int m = 0; m <= x.cap(); ++m) {
    std::unordered_map<std::vector<int>, char, VectorHash> seen;
    std::vector<int> key, sub;
    for (auto& fam : lim_next.at[m].families) {
      sub.clear();
      for (int p : prime_pos_in_next) sub.push_back(fam[p]);
      int a = lim_prime.at[m].find(sub);
      if (a < 0) {
        v.passed = false;
        v.detail = "restriction to the primed stage is not a family";
        return v;
      }
      key.assign(1, a);
      for (auto& d : ts) {
        std::vector<int> want;
        for (int p : d.prime_pos) want.push_back(sub[p]);
        const int xv = fam[d.pos_next];
        if (d.mo.matching_map.at[m][xv] != d.mo.limit.at[m].find(want)) {
          v.passed = false;
          v.detail = "square does not commute in dimension " + std::to_string(m);
          return v;
        }
        key.push_back(xv);
      }
      if (!seen.emplace(key, 1).second) {
        v.passed = false;
        v.detail = "comparison map is not injective in dimension " + std::to_string(m);
        return v;
      }
    }
    // pullback cardinality by fiber counting
    std::vector<std::vector<std::size_t>> fiber(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
      fiber[j].assign(ts[j].mo.limit.at[m].families.size(), 0);
      for (int w : ts[j].mo.matching_map.at[m]) ++fiber[j][w];
    }
    std::size_t total = 0;
    std::vector<int> want;
    for (auto& a : lim_prime.at[m].families) {
      std::size_t prod = 1;
      for (std::size_t j = 0; j < ts.size() && prod; ++j) {
        want.clear();
        for (int p : ts[j].prime_pos) want.push_back(a[p]);
        int w = ts[j].mo.limit.at[m].find(want);
        prod *= w < 0 ? 0 : fiber[j][w];
      }
      total += prod;
    }
    v.sizes.push_back(total);
    if (total != lim_next.at[m].families.size()) {
      v.passed = false;
      v.detail = "dimension " + std::to_string(m) + ": pullback has " + std::to_string(total) + " elements, limit has " +
                 std::to_string(lim_next.at[m].families.size());
      return v;
    }
  }
  return v;
}

/// The tower P_{nk-1} -> ... -> P_{-1}; stages[s] is P_{s-1}.
struct Tower {
  std::vector<RelativeMatching> stages;
  std::vector<SSetMap> steps;  ///< steps[s] : P_s -> P_{s-1}
};

inline Tower build_tower(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f, int k) {
  MatchingCategory mc(x.arity(), k);
  const int nk = x.arity() * k;
  Tower t;
  for (int i = -1; i <= nk - 1; ++i) t.stages.push_back(relative_matching(x, y, f, mc, filtration_stage(mc, i)));
  for (std::size_t s = 1; s < t.stages.size(); ++s) t.steps.push_back(restrict_relative(t.stages[s], t.stages[s - 1]));
  return t;
}

/// The composite of the tower equals the direct map P^{full} -> P^{diagonal}.
inline IsoVerdict check_tower_composition(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f, int k) {
  auto t = build_tower(x, y, f, k);
  SSetMap comp = identity_map(t.stages.back().P.value);
  for (std::size_t s = t.steps.size(); s-- > 0;) comp = compose(t.steps[s], comp);
  auto full = build_P(x, y, f, k, PVariant::full);
  auto diag = build_P(x, y, f, k, PVariant::diagonal);
  auto direct = restrict_relative(full, diag);
  if (!(full.P.value == t.stages.back().P.value)) return {false, "top stage differs from the full P"};
  if (!(diag.P.value == t.stages.front().P.value)) return {false, "bottom stage differs from the diagonal P"};
  if (!(comp == direct)) return {false, "tower composite differs from the direct map"};
  return {};
}

/// Reedy fibration check at every degree tuple within the truncation.
struct ReedyVerdict {
  bool passed = true;
  int checked_up_to = 0;
  std::vector<int> failing_at;
  std::optional<HornWitness> witness;
  std::size_t degrees_checked = 0;
};

inline ReedyVerdict is_reedy_fibration_capped(const MultiCosimplicial& x, const MultiCosimplicial& y, const MultiMorphism& f, int check_dim) {
  ReedyVerdict v;
  v.checked_up_to = check_dim;
  for (std::size_t o = 0; o < x.num_objects(); ++o) {
    auto p = x.degrees(static_cast<int>(o));
    MatchingCategory mc(p);
    auto r = relative_matching(x, y, f, mc, all_objects(mc));
    auto k = kan_fibration_check(x.value(static_cast<int>(o)), r.P.value, r.relative_map, check_dim);
    ++v.degrees_checked;
    if (!k.passed) {
      v.passed = false;
      v.failing_at = p;
      v.witness = k.failure;
      return v;
    }
  }
  return v;
}

/// The three parts of the diagonal preservation statement, reported separately.
struct DiagonalFibrationReport {
  bool precondition = false;  ///< f is a capped Reedy fibration
  ReedyVerdict reedy;
  bool to_full = true;      ///< X(k,...,k) -> P^{full} at every k
  bool full_to_diag = true;  ///< P^{full} -> P^{diagonal} at every k
  ReedyVerdict diagonal;
  std::string detail;

  bool vacuous() const { return !precondition; }
  bool passed() const { return !precondition || (to_full && full_to_diag && diagonal.passed); }
};

inline DiagonalFibrationReport check_diagonal_preserves_fibration(const MultiCosimplicial& x, const MultiCosimplicial& y,
                                                                 const MultiMorphism& f, int check_dim) {
  DiagonalFibrationReport r;
  r.reedy = is_reedy_fibration_capped(x, y, f, check_dim);
  r.precondition = r.reedy.passed;
  for (int k = 0; k <= x.trunc(); ++k) {
    auto full = build_P(x, y, f, k, PVariant::full);
    auto diag = build_P(x, y, f, k, PVariant::diagonal);
    auto a = kan_fibration_check(x.value(std::vector<int>(x.arity(), k)), full.P.value, full.relative_map, check_dim);
    auto b = kan_fibration_check(full.P.value, diag.P.value, restrict_relative(full, diag), check_dim);
    if (!a.passed && r.to_full) {
      r.to_full = false;
      r.detail += "degree " + std::to_string(k) + ": relative matching map: " + a.failure->describe() + "; ";
    }
    if (!b.passed && r.full_to_diag) {
      r.full_to_diag = false;
      r.detail += "degree " + std::to_string(k) + ": P comparison: " + b.failure->describe() + "; ";
    }
  }
  r.diagonal = is_reedy_fibration_capped(diagonal(x), diagonal(y), diagonal(f, x), check_dim);
  return r;
}

// ---- latching ----

/// Latching category at p: mono tuples into p, not all identities; thin.
struct LatchingCategory {
  std::vector<int> at;
  std::vector<MultiMap> objects;
  FinCat cat;
};

inline LatchingCategory latching_category(const std::vector<int>& at) {
  LatchingCategory lc{at, {}, {}};
  std::vector<std::vector<int>> tuples{{}};
  for (int p : at) {
    std::vector<std::vector<int>> next;
    for (auto& t : tuples)
      for (int q = 0; q <= p; ++q) {
        auto e = t;
        e.push_back(q);
        next.push_back(e);
      }
    tuples = std::move(next);
  }
  for (auto& q : tuples) {
    std::vector<std::vector<MonotoneMap>> per;
    for (std::size_t j = 0; j < at.size(); ++j) per.push_back(enumerate_monos(q[j], at[j]));
    std::vector<MultiMap> ms{MultiMap{}};
    for (auto& options : per) {
      std::vector<MultiMap> next;
      for (auto& pre : ms)
        for (auto& mo : options) {
          auto m = pre;
          m.components.push_back(mo);
          next.push_back(std::move(m));
        }
      ms = std::move(next);
    }
    for (auto& m : ms)
      if (!m.is_identity()) lc.objects.push_back(std::move(m));
  }
  auto image_within = [](const MonotoneMap& a, const MonotoneMap& b) {
    for (int v : a.images())
      if (std::find(b.images().begin(), b.images().end(), v) == b.images().end()) return false;
    return true;
  };
  lc.cat = FinCat::from_preorder(static_cast<int>(lc.objects.size()), [&](int a, int b) {
    for (std::size_t j = 0; j < lc.at.size(); ++j)
      if (!image_within(lc.objects[a][j], lc.objects[b][j])) return false;
    return true;
  });
  return lc;
}

/// mu with b . mu = a, when the image of a lies in the image of b.
inline MultiMap mono_quotient(const MultiMap& a, const MultiMap& b) {
  MultiMap mu;
  for (int j = 0; j < a.arity(); ++j) {
    std::vector<int> v;
    for (int x : a[j].images()) v.push_back(static_cast<int>(std::find(b[j].images().begin(), b[j].images().end(), x) - b[j].images().begin()));
    mu.components.push_back(MonotoneMap(b[j].domain(), std::move(v)));
  }
  return mu;
}

struct LatchingData {
  SSetColimit colimit;
  SSetMap latching_map;
  bool injective = false;
};

inline LatchingData latching_object(const MultiCosimplicial& x, const std::vector<int>& at) {
  auto lc = latching_category(at);
  auto shape = std::make_shared<FinCat>(lc.cat);
  SSetDiagram d{shape, {}, {}, x.cap()};
  for (auto& o : lc.objects) d.values.push_back(x.value(o.domain()));
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
    const Arrow& a = shape->arrow(static_cast<int>(m));
    if (shape->is_identity(static_cast<int>(m))) d.maps.push_back(identity_map(d.values[a.src]));
    else d.maps.push_back(x.structure_map(mono_quotient(lc.objects[a.src], lc.objects[a.tgt])));
  }
  LatchingData ld;
  ld.colimit = colimit(d);
  const auto& target = x.value(at);
  std::vector<SSetMap> legs;
  for (auto& o : lc.objects) legs.push_back(x.structure_map(o));
  for (int m = 0; m <= x.cap(); ++m) {
    ld.latching_map.at.emplace_back(ld.colimit.value.count(m), -1);
    for (std::size_t o = 0; o < lc.objects.size(); ++o)
      for (std::size_t s = 0; s < d.values[o].count(m); ++s) ld.latching_map.at[m][ld.colimit.injection[o].at[m][s]] = legs[o].at[m][s];
  }
  ld.injective = is_injective(ld.latching_map, target);
  return ld;
}

/// Latching map of the standard n-cosimplicial object at p: injective with image exactly the
/// simplices that fail to be surjective in some coordinate.
struct LatchingBoundaryVerdict {
  bool passed = false;
  bool injective = false;
  bool image_is_boundary = false;
  std::size_t image_nondegenerate = 0;  ///< nondegenerate simplices in the image, all dimensions
};

inline LatchingBoundaryVerdict latching_is_boundary(int n, const std::vector<int>& at, int cap) {
  const int trunc = *std::max_element(at.begin(), at.end());
  auto x = standard_multi(n, std::max(trunc, 0), cap);
  auto ld = latching_object(x, at);
  LatchingBoundaryVerdict v;
  v.injective = ld.injective;
  const auto& target = x.value(at);
  v.image_is_boundary = true;
  for (int m = 0; m <= cap; ++m) {
    std::vector<char> hit(target.count(m), 0);
    for (int y : ld.latching_map.at[m]) hit[y] = 1;
    auto simplices = enumerate_multimaps(std::vector<int>(n, m), at);
    // simplices of the product in index order are tuples of monotone maps
    auto mask = target.degenerate_mask(m);
    for (std::size_t s = 0; s < target.count(m); ++s) {
      bool boundary = false;
      for (auto& c : simplices[s].components) boundary = boundary || !c.is_epi();
      if (boundary != static_cast<bool>(hit[s])) v.image_is_boundary = false;
      if (hit[s] && !mask[s]) ++v.image_nondegenerate;
    }
  }
  v.passed = v.injective && v.image_is_boundary;
  return v;
}

// ---- Reedy's lemma on a cube ----

/// A map of cospans B -> D <- C into B' -> D' <- C'.
struct CospanMap {
  TruncSSet b, c, d, b2, c2, d2;
  SSetMap g, h, g2, h2;  ///< g : B -> D, h : C -> D, and primes
  SSetMap fb, fc, fd;
};

/// Product with a fiber F of the cospan Delta[1] -> point <- Delta[1], mapping to the cospan by projection.
inline CospanMap interval_cospan_map(const TruncSSet& fiber) {
  const int cap = fiber.cap();
  CospanMap q;
  q.b2 = standard_simplex(1, cap);
  q.c2 = standard_simplex(1, cap);
  q.d2 = point(cap);
  q.b = product(q.b2, fiber);
  q.c = product(q.c2, fiber);
  q.d = product(q.d2, fiber);
  q.g2 = map_to_point(q.b2);
  q.h2 = map_to_point(q.c2);
  q.g = product_map(q.g2, identity_map(fiber), fiber, fiber);
  q.h = product_map(q.h2, identity_map(fiber), fiber, fiber);
  q.fb = projection_first(q.b2, fiber);
  q.fc = projection_first(q.c2, fiber);
  q.fd = projection_first(q.d2, fiber);
  return q;
}

struct ReedyLemmaVerdict {
  bool hypotheses = false;  ///< f_B and C -> C' x_{D'} D are capped fibrations
  bool conclusion = false;  ///< f_A : B x_D C -> B' x_{D'} C' is a capped fibration
  bool passed() const { return !hypotheses || conclusion; }
};

inline ReedyLemmaVerdict check_reedy_lemma(const CospanMap& q, int check_dim) {
  auto a = pullback(q.b, q.g, q.c, q.h, q.d);
  auto a2 = pullback(q.b2, q.g2, q.c2, q.h2, q.d2);
  auto rel = pullback(q.c2, q.h2, q.d, q.fd, q.d2);
  SSetMap c_to_rel, fa;
  for (int m = 0; m <= q.b.cap(); ++m) {
    c_to_rel.at.emplace_back();
    for (std::size_t s = 0; s < q.c.count(m); ++s) c_to_rel.at[m].push_back(rel.find(m, q.fc.at[m][s], q.h.at[m][s]));
    fa.at.emplace_back();
    for (auto [x, y] : a.pairs[m]) fa.at[m].push_back(a2.find(m, q.fb.at[m][x], q.fc.at[m][y]));
  }
  ReedyLemmaVerdict v;
  v.hypotheses = kan_fibration_check(q.b, q.b2, q.fb, check_dim).passed &&
                 kan_fibration_check(q.c, rel.value, c_to_rel, check_dim).passed;
  v.conclusion = kan_fibration_check(a.value, a2.value, fa, check_dim).passed;
  return v;
}

}  // namespace cosimplex
