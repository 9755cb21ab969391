#pragma once

#include <random>
#include <string>
#include <vector>

#include "categories.hpp"
#include "cosimplicial.hpp"
#include "sset.hpp"

namespace cosimplex {

/// Nerve of the indiscrete groupoid on n objects: a Kan complex.
inline TruncSSet indiscrete_groupoid(int n, int cap) {
  return nerve(FinCat::from_preorder(n, [](int, int) { return true; }), cap).sset;
}

/// Subcomplex generated by a random half of the nondegenerate simplices (at least one vertex).
inline TruncSSet random_subcomplex(const TruncSSet& a, std::mt19937& rng, SSetMap* inclusion = nullptr) {
  std::vector<std::vector<char>> keep(a.cap() + 1);
  std::bernoulli_distribution coin(0.5);
  for (int m = 0; m <= a.cap(); ++m) {
    keep[m].assign(a.count(m), 0);
    auto deg = a.degenerate_mask(m);
    for (std::size_t s = 0; s < a.count(m); ++s)
      if (!deg[s] && coin(rng)) keep[m][s] = 1;
  }
  keep[0][0] = 1;
  close_marks(a, keep);
  return subobject(a, keep, inclusion);
}

/// Quotient of a by a random subcomplex collapsed to a point.
inline TruncSSet random_quotient(const TruncSSet& a, std::mt19937& rng) {
  SSetMap inc;
  random_subcomplex(a, rng, &inc);
  return collapse_subobject(a, inc);
}

struct CorpusObject {
  std::string name;
  MultiCosimplicial value;
};

struct CorpusMap {
  std::string name;
  std::size_t source, target;  ///< indices into the object list
  MultiMorphism map;
};

struct Corpus {
  std::vector<CorpusObject> objects;
  std::vector<CorpusMap> maps;

  std::size_t find(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i].name == name) return i;
    throw std::out_of_range("corpus has no object " + name);
  }
};

/// Standard test objects at arity n, truncation N and simplicial cap d, with seeded perturbations.
inline Corpus build_corpus(int arity, int trunc, int cap, unsigned seed) {
  Corpus c;
  std::mt19937 rng(seed);
  auto add = [&](std::string name, MultiCosimplicial x) {
    c.objects.push_back({std::move(name), std::move(x)});
    return c.objects.size() - 1;
  };
  auto delta = standard_multi(arity, trunc, cap);
  MultiMorphism sk0_inc, sk1_inc;
  auto sk0 = skeleton(delta, 0, &sk0_inc);
  auto sk1 = skeleton(delta, 1, &sk1_inc);
  const auto i_delta = add("standard", delta);
  const auto i_sk0 = add("standard.sk0", sk0);
  const auto i_sk1 = add("standard.sk1", sk1);
  const auto i_pt = add("const.point", constant_multi(point(cap), arity, trunc));
  add("const.discrete2", constant_multi(discrete(2, cap), arity, trunc));
  add("const.interval", constant_multi(standard_simplex(1, cap), arity, trunc));
  const auto circle = boundary(2, cap);
  const auto i_circle = add("const.circle", constant_multi(circle, arity, trunc));
  const auto i_groupoid = add("const.groupoid2", constant_multi(indiscrete_groupoid(2, cap), arity, trunc));
  add("const.horn", constant_multi(horn(2, 1, cap), arity, trunc));
  auto one = standard_multi(1, trunc, cap);
  if (arity > 1) {
    add("first.standard", reindex(one, arity, {0}));
    add("first.sk0", reindex(zero_skeleton(one), arity, {0}));
    add("last.standard", reindex(one, arity, {arity - 1}));
  }
  const auto i_prod = add("standard*circle", product(delta, constant_multi(circle, arity, trunc)));
  auto square = product(standard_simplex(1, cap), standard_simplex(1, cap));
  add("const.random.sub", constant_multi(random_subcomplex(square, rng), arity, trunc));
  add("const.random.quotient", constant_multi(random_quotient(standard_simplex(2, cap), rng), arity, trunc));

  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    const auto& x = c.objects[i].value;
    c.maps.push_back({c.objects[i].name + "->point", i, i_pt, to_terminal(x)});
    c.maps.push_back({"id:" + c.objects[i].name, i, i, identity_morphism(x)});
  }
  c.maps.push_back({"sk0->standard", i_sk0, i_delta, sk0_inc});
  c.maps.push_back({"sk1->standard", i_sk1, i_delta, sk1_inc});
  c.maps.push_back({"standard*circle->standard", i_prod, i_delta, projection_first(delta, c.objects[i_circle].value)});
  c.maps.push_back({"standard*circle->circle", i_prod, i_circle, projection_second(delta, c.objects[i_circle].value)});
  c.maps.push_back({"groupoid->point", i_groupoid, i_pt, to_terminal(c.objects[i_groupoid].value)});
  return c;
}

/// Pairs (K, X) of small simplicial sets.
struct SSetPair {
  std::string k_name, x_name;
  TruncSSet k, x;
};

inline std::vector<SSetPair> build_pairs(int cap) {
  std::vector<std::pair<std::string, TruncSSet>> ks{{"point", point(cap)},
                                                    {"boundary1", boundary(1, cap)},
                                                    {"interval", standard_simplex(1, cap)},
                                                    {"horn2_1", horn(2, 1, cap)},
                                                    {"circle", boundary(2, cap)}};
  std::vector<std::pair<std::string, TruncSSet>> xs{{"point", point(cap)},
                                                    {"discrete2", discrete(2, cap)},
                                                    {"interval", standard_simplex(1, cap)},
                                                    {"circle", boundary(2, cap)}};
  std::vector<SSetPair> out;
  for (auto& [kn, k] : ks)
    for (auto& [xn, x] : xs) out.push_back({kn, xn, k, x});
  return out;
}

}  // namespace cosimplex
