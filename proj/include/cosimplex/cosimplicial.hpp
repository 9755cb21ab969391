#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "delta.hpp"
#include "hom.hpp"
#include "sset.hpp"

namespace cosimplex {

class FunctorialityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One elementary generator of (Delta_{<=N})^n applied at a given object.
struct Step {
  int coord;
  bool coface;
  int index;
};

/// Steps realizing theta : [a] -> [b] in one coordinate: codegeneracies for the collapsed
/// adjacencies (largest first), then cofaces for the missed values (smallest first).
inline std::vector<Step> elementary_steps(const MonotoneMap& theta, int coord) {
  std::vector<Step> steps;
  auto u = collapse_set(theta);
  for (auto it = u.rbegin(); it != u.rend(); ++it) steps.push_back({coord, false, *it});
  std::vector<char> hit(theta.codomain() + 1, 0);
  for (int v : theta.images()) hit[v] = 1;
  for (int v = 0; v <= theta.codomain(); ++v)
    if (!hit[v]) steps.push_back({coord, true, v});
  return steps;
}

inline std::vector<Step> elementary_steps(const MultiMap& alpha) {
  std::vector<Step> steps;
  for (int j = 0; j < alpha.arity(); ++j) {
    auto s = elementary_steps(alpha[j], j);
    steps.insert(steps.end(), s.begin(), s.end());
  }
  return steps;
}

/// Truncated n-cosimplicial truncated simplicial set: a functor (Delta_{<=N})^n -> sSet_{<=d},
/// stored as its values and the maps of the elementary generators.
class MultiCosimplicial {
 public:
  using ValueFn = std::function<TruncSSet(const std::vector<int>&)>;
  /// Map for an elementary multimap (one non-identity component).
  using GeneratorFn = std::function<SSetMap(const MultiMap&)>;

  MultiCosimplicial() = default;

  static MultiCosimplicial build(int arity, int trunc, int cap, const ValueFn& value, const GeneratorFn& gen) {
    if (arity < 1) throw std::invalid_argument("arity must be at least 1");
    MultiCosimplicial x;
    x.arity_ = arity;
    x.trunc_ = trunc;
    x.cap_ = cap;
    const std::size_t nobj = x.num_objects();
    x.coface_.resize(nobj);
    x.codegen_.resize(nobj);
    for (std::size_t o = 0; o < nobj; ++o) {
      auto p = x.degrees(static_cast<int>(o));
      x.values_.push_back(value(p));
      if (x.values_.back().cap() != cap) throw std::invalid_argument("value has the wrong cap");
      x.coface_[o].resize(arity);
      x.codegen_[o].resize(arity);
      for (int j = 0; j < arity; ++j) {
        if (p[j] < trunc)
          for (int i = 0; i <= p[j] + 1; ++i)
            x.coface_[o][j].push_back(gen(x.generator(p, j, MonotoneMap::coface(p[j] + 1, i))));
        if (p[j] > 0)
          for (int i = 0; i < p[j]; ++i)
            x.codegen_[o][j].push_back(gen(x.generator(p, j, MonotoneMap::codegeneracy(p[j] - 1, i))));
      }
    }
    return x;
  }

  int arity() const { return arity_; }
  int trunc() const { return trunc_; }
  int cap() const { return cap_; }
  std::size_t num_objects() const {
    std::size_t n = 1;
    for (int j = 0; j < arity_; ++j) n *= static_cast<std::size_t>(trunc_ + 1);
    return n;
  }

  int object(const std::vector<int>& p) const {
    if (static_cast<int>(p.size()) != arity_) throw std::invalid_argument("degree tuple has the wrong arity");
    int o = 0;
    for (int d : p) {
      if (d < 0 || d > trunc_) throw std::out_of_range("degree " + std::to_string(d) + " outside the truncation");
      o = o * (trunc_ + 1) + d;
    }
    return o;
  }
  std::vector<int> degrees(int o) const {
    std::vector<int> p(arity_);
    for (int j = arity_; j-- > 0;) {
      p[j] = o % (trunc_ + 1);
      o /= trunc_ + 1;
    }
    return p;
  }

  const TruncSSet& value(int o) const { return values_[o]; }
  const TruncSSet& value(const std::vector<int>& p) const { return values_[object(p)]; }
  const std::vector<TruncSSet>& values() const { return values_; }

  /// Map of an elementary generator out of object o.
  const SSetMap& generator_map(int o, const Step& s) const {
    return s.coface ? coface_[o][s.coord].at(s.index) : codegen_[o][s.coord].at(s.index);
  }
  SSetMap& generator_map(int o, const Step& s) {
    return s.coface ? coface_[o][s.coord].at(s.index) : codegen_[o][s.coord].at(s.index);
  }

  int step_target(int o, const Step& s) const {
    auto p = degrees(o);
    p[s.coord] += s.coface ? 1 : -1;
    return object(p);
  }

  /// Image of the m-simplex x of X(domain alpha) under X(alpha).
  int act(const MultiMap& alpha, int m, int x) const {
    int o = object(alpha.domain());
    for (auto& s : elementary_steps(alpha)) {
      x = generator_map(o, s).at[m][x];
      o = step_target(o, s);
    }
    return x;
  }

  SSetMap structure_map(const MultiMap& alpha) const {
    const int o = object(alpha.domain());
    auto steps = elementary_steps(alpha);
    SSetMap f;
    for (int m = 0; m <= cap_; ++m) {
      f.at.emplace_back(values_[o].count(m));
      for (std::size_t x = 0; x < values_[o].count(m); ++x) {
        int y = static_cast<int>(x), c = o;
        for (auto& s : steps) {
          y = generator_map(c, s).at[m][y];
          c = step_target(c, s);
        }
        f.at[m][x] = y;
      }
    }
    return f;
  }

  /// Elementary generators out of object o.
  std::vector<Step> generators_out(int o) const {
    std::vector<Step> g;
    for (int j = 0; j < arity_; ++j) {
      for (std::size_t i = 0; i < coface_[o][j].size(); ++i) g.push_back({j, true, static_cast<int>(i)});
      for (std::size_t i = 0; i < codegen_[o][j].size(); ++i) g.push_back({j, false, static_cast<int>(i)});
    }
    return g;
  }

  MultiMap step_map(int o, const Step& s) const {
    auto p = degrees(o);
    return generator(p, s.coord, s.coface ? MonotoneMap::coface(p[s.coord] + 1, s.index)
                                          : MonotoneMap::codegeneracy(p[s.coord] - 1, s.index));
  }

  /// Throws FunctorialityError naming the failing relation. Checks every value, every generator
  /// map, and X(g2) X(g1) = X(g2 g1) for all composable generator pairs, which covers the
  /// cosimplicial identities and the commutation of different coordinates.
  void validate() const {
    for (std::size_t o = 0; o < values_.size(); ++o) {
      values_[o].validate();
      for (auto& s : generators_out(static_cast<int>(o))) {
        auto d = simplicial_map_defect(values_[o], values_[step_target(static_cast<int>(o), s)], generator_map(static_cast<int>(o), s));
        if (!d.empty()) throw FunctorialityError("generator " + to_string(step_map(static_cast<int>(o), s)) + ": " + d);
      }
    }
    for (std::size_t o = 0; o < values_.size(); ++o)
      for (auto& s1 : generators_out(static_cast<int>(o))) {
        const int mid = step_target(static_cast<int>(o), s1);
        auto g1 = step_map(static_cast<int>(o), s1);
        for (auto& s2 : generators_out(mid)) {
          auto g2 = step_map(mid, s2);
          auto both = compose(g2, g1);
          auto& f1 = generator_map(static_cast<int>(o), s1);
          auto& f2 = generator_map(mid, s2);
          for (int m = 0; m <= cap_; ++m)
            for (std::size_t x = 0; x < values_[o].count(m); ++x)
              if (f2.at[m][f1.at[m][x]] != act(both, m, static_cast<int>(x)))
                throw FunctorialityError("relation " + to_string(g2) + " . " + to_string(g1) + " = " + to_string(both) +
                                         " fails on simplex " + std::to_string(x) + " of dimension " + std::to_string(m));
        }
      }
  }

  bool operator==(const MultiCosimplicial&) const = default;

 private:
  MultiMap generator(const std::vector<int>& p, int coord, const MonotoneMap& g) const {
    MultiMap a;
    for (int j = 0; j < arity_; ++j) a.components.push_back(j == coord ? g : MonotoneMap::identity(p[j]));
    return a;
  }

  int arity_ = 1, trunc_ = 0, cap_ = 0;
  std::vector<TruncSSet> values_;
  std::vector<std::vector<std::vector<SSetMap>>> coface_, codegen_;  // [object][coordinate][index]
};

/// Natural transformation: one SSetMap per object.
struct MultiMorphism {
  std::vector<SSetMap> at;
  bool operator==(const MultiMorphism&) const = default;
};

inline std::string naturality_defect(const MultiCosimplicial& a, const MultiCosimplicial& b, const MultiMorphism& f) {
  if (a.arity() != b.arity() || a.trunc() != b.trunc() || a.cap() != b.cap()) return "shapes differ";
  if (f.at.size() != a.num_objects()) return "wrong number of components";
  for (std::size_t o = 0; o < a.num_objects(); ++o) {
    auto d = simplicial_map_defect(a.value(static_cast<int>(o)), b.value(static_cast<int>(o)), f.at[o]);
    if (!d.empty()) return "component " + degrees_string(a.degrees(static_cast<int>(o))) + ": " + d;
    for (auto& s : a.generators_out(static_cast<int>(o))) {
      const int t = a.step_target(static_cast<int>(o), s);
      auto& ga = a.generator_map(static_cast<int>(o), s);
      auto& gb = b.generator_map(static_cast<int>(o), s);
      for (int m = 0; m <= a.cap(); ++m)
        for (std::size_t x = 0; x < a.value(static_cast<int>(o)).count(m); ++x)
          if (f.at[t].at[m][ga.at[m][x]] != gb.at[m][f.at[o].at[m][x]])
            return "naturality fails for " + to_string(a.step_map(static_cast<int>(o), s)) + " on simplex " +
                   std::to_string(x) + " of dimension " + std::to_string(m);
    }
  }
  return {};
}

inline MultiMorphism identity_morphism(const MultiCosimplicial& x) {
  MultiMorphism f;
  for (auto& v : x.values()) f.at.push_back(identity_map(v));
  return f;
}

inline MultiMorphism compose(const MultiMorphism& g, const MultiMorphism& f) {
  MultiMorphism h;
  for (std::size_t o = 0; o < f.at.size(); ++o) h.at.push_back(compose(g.at[o], f.at[o]));
  return h;
}

inline MultiMorphism to_terminal(const MultiCosimplicial& x) {
  MultiMorphism f;
  for (auto& v : x.values()) {
    f.at.emplace_back();
    for (int m = 0; m <= v.cap(); ++m) f.at.back().at.emplace_back(v.count(m), 0);
  }
  return f;
}

/// Sorts (object, dimension) with faces, degeneracies and the generator maps as operations.
inline void append_multi(Algebra& alg, const MultiCosimplicial& x) {
  const int base = static_cast<int>(alg.sizes.size());
  const int per = x.cap() + 1;
  for (auto& v : x.values()) append_sset(alg, v);
  for (std::size_t o = 0; o < x.num_objects(); ++o)
    for (auto& s : x.generators_out(static_cast<int>(o))) {
      const int t = x.step_target(static_cast<int>(o), s);
      auto& g = x.generator_map(static_cast<int>(o), s);
      for (int m = 0; m <= x.cap(); ++m)
        alg.add_op(base + static_cast<int>(o) * per + m, base + t * per + m, g.at[m]);
    }
}

inline Algebra multi_algebra(const MultiCosimplicial& x) {
  Algebra a;
  append_multi(a, x);
  return a;
}

inline MultiMorphism unflatten_morphism(const std::vector<int>& flat, const std::vector<std::size_t>& offsets, const MultiCosimplicial& x) {
  MultiMorphism f;
  const int per = x.cap() + 1;
  for (std::size_t o = 0; o < x.num_objects(); ++o) f.at.push_back(unflatten_map(flat, offsets, static_cast<int>(o) * per, x.cap()));
  return f;
}

inline std::vector<MultiMorphism> enumerate_morphisms(const MultiCosimplicial& a, const MultiCosimplicial& b) {
  auto sa = multi_algebra(a), sb = multi_algebra(b);
  HomSearch search(sa, sb);
  std::vector<MultiMorphism> out;
  search.for_each([&](const std::vector<int>& v) {
    out.push_back(unflatten_morphism(v, search.offsets(), a));
    return true;
  });
  return out;
}

inline std::size_t count_morphisms(const MultiCosimplicial& a, const MultiCosimplicial& b) {
  auto sa = multi_algebra(a), sb = multi_algebra(b);
  return HomSearch(sa, sb).count();
}

// ---- builders ----

/// The product of standard simplices [p] |-> Delta[p_1] x ... x Delta[p_n]; arity 1 gives the
/// cosimplicial standard simplex.
inline MultiCosimplicial standard_multi(int arity, int trunc, int cap) {
  auto value = [cap](const std::vector<int>& p) {
    std::vector<TruncSSet> f;
    for (int d : p) f.push_back(standard_simplex(d, cap));
    return product(f, cap);
  };
  auto gen = [cap](const MultiMap& a) {
    SSetMap f;
    for (int m = 0; m <= cap; ++m) {
      std::vector<std::size_t> nd, nc;
      for (auto& c : a.components) {
        nd.push_back(count_monotone(m, c.domain()));
        nc.push_back(count_monotone(m, c.codomain()));
      }
      std::size_t total = 1;
      for (auto n : nd) total *= n;
      std::vector<std::vector<int>> post;
      for (auto& c : a.components) {
        post.emplace_back();
        for (auto& b : enumerate_monotone(m, c.domain())) post.back().push_back(static_cast<int>(monotone_rank(compose(c, b))));
      }
      f.at.emplace_back(total);
      for (std::size_t x = 0; x < total; ++x) {
        std::size_t rest = x, y = 0, scale = 1;
        for (std::size_t j = a.components.size(); j-- > 0;) {
          const std::size_t xj = rest % nd[j];
          rest /= nd[j];
          y += static_cast<std::size_t>(post[j][xj]) * scale;
          scale *= nc[j];
        }
        f.at[m][x] = static_cast<int>(y);
      }
    }
    return f;
  };
  return MultiCosimplicial::build(arity, trunc, cap, value, gen);
}

inline MultiCosimplicial constant_multi(const TruncSSet& k, int arity, int trunc) {
  return MultiCosimplicial::build(arity, trunc, k.cap(), [&](const std::vector<int>&) { return k; },
                                  [&](const MultiMap&) { return identity_map(k); });
}

/// Restriction along the functor (Delta)^n -> (Delta)^m, [p] |-> ([p_{c_0}], ..., [p_{c_{m-1}}]).
/// The diagonal is coords = {0, ..., 0} with n = 1.
inline MultiCosimplicial reindex(const MultiCosimplicial& x, int arity, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != x.arity()) throw std::invalid_argument("reindex: one coordinate per source coordinate");
  auto pull = [&](const std::vector<int>& p) {
    std::vector<int> q;
    for (int c : coords) q.push_back(p.at(c));
    return q;
  };
  return MultiCosimplicial::build(
      arity, x.trunc(), x.cap(), [&](const std::vector<int>& p) { return x.value(pull(p)); },
      [&](const MultiMap& a) {
        MultiMap b;
        for (int c : coords) b.components.push_back(a[c]);
        return x.structure_map(b);
      });
}

inline MultiCosimplicial diagonal(const MultiCosimplicial& x) { return reindex(x, 1, std::vector<int>(x.arity(), 0)); }

inline MultiMorphism reindex(const MultiMorphism& f, const MultiCosimplicial& x, int arity, const std::vector<int>& coords) {
  MultiMorphism g;
  const int trunc = x.trunc();
  std::size_t nobj = 1;
  for (int j = 0; j < arity; ++j) nobj *= static_cast<std::size_t>(trunc + 1);
  for (std::size_t o = 0; o < nobj; ++o) {
    std::vector<int> p(arity);
    std::size_t r = o;
    for (int j = arity; j-- > 0;) {
      p[j] = static_cast<int>(r % static_cast<std::size_t>(trunc + 1));
      r /= static_cast<std::size_t>(trunc + 1);
    }
    std::vector<int> q;
    for (int c : coords) q.push_back(p[c]);
    g.at.push_back(f.at[x.object(q)]);
  }
  return g;
}

inline MultiMorphism diagonal(const MultiMorphism& f, const MultiCosimplicial& x) {
  return reindex(f, x, 1, std::vector<int>(x.arity(), 0));
}

/// Degreewise product.
inline MultiCosimplicial product(const MultiCosimplicial& a, const MultiCosimplicial& b) {
  return MultiCosimplicial::build(
      a.arity(), a.trunc(), a.cap(), [&](const std::vector<int>& p) { return product(a.value(p), b.value(p)); },
      [&](const MultiMap& al) {
        return product_map(a.structure_map(al), b.structure_map(al), b.value(al.domain()), b.value(al.codomain()));
      });
}

inline MultiMorphism projection_first(const MultiCosimplicial& a, const MultiCosimplicial& b) {
  MultiMorphism f;
  for (std::size_t o = 0; o < a.num_objects(); ++o) f.at.push_back(projection_first(a.value(static_cast<int>(o)), b.value(static_cast<int>(o))));
  return f;
}

inline MultiMorphism projection_second(const MultiCosimplicial& a, const MultiCosimplicial& b) {
  MultiMorphism f;
  for (std::size_t o = 0; o < a.num_objects(); ++o) f.at.push_back(projection_second(a.value(static_cast<int>(o)), b.value(static_cast<int>(o))));
  return f;
}

/// Degreewise j-skeleton with its inclusion.
inline MultiCosimplicial skeleton(const MultiCosimplicial& x, int j, MultiMorphism* inclusion = nullptr) {
  std::vector<SSetMap> inc(x.num_objects());
  std::vector<TruncSSet> sub(x.num_objects());
  for (std::size_t o = 0; o < x.num_objects(); ++o) sub[o] = skeleton(x.value(static_cast<int>(o)), j, &inc[o]);
  // inverse of each inclusion, to restrict the structure maps
  std::vector<std::vector<std::vector<int>>> back(x.num_objects());
  for (std::size_t o = 0; o < x.num_objects(); ++o) {
    for (int m = 0; m <= x.cap(); ++m) {
      back[o].emplace_back(x.value(static_cast<int>(o)).count(m), -1);
      for (std::size_t s = 0; s < inc[o].at[m].size(); ++s) back[o][m][inc[o].at[m][s]] = static_cast<int>(s);
    }
  }
  auto y = MultiCosimplicial::build(
      x.arity(), x.trunc(), x.cap(), [&](const std::vector<int>& p) { return sub[x.object(p)]; },
      [&](const MultiMap& a) {
        const int s = x.object(a.domain()), t = x.object(a.codomain());
        auto big = x.structure_map(a);
        SSetMap f;
        for (int m = 0; m <= x.cap(); ++m) {
          f.at.emplace_back();
          for (int e : inc[s].at[m]) {
            int v = back[t][m][big.at[m][e]];
            if (v < 0) throw FunctorialityError("skeleton is not preserved by a structure map");
            f.at[m].push_back(v);
          }
        }
        return f;
      });
  if (inclusion) inclusion->at = std::move(inc);
  return y;
}

inline MultiCosimplicial zero_skeleton(const MultiCosimplicial& x, MultiMorphism* inclusion = nullptr) {
  return skeleton(x, 0, inclusion);
}

}  // namespace cosimplex
