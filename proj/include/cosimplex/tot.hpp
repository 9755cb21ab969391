#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "categories.hpp"
#include "cosimplicial.hpp"
#include "ends.hpp"
#include "homology.hpp"
#include "kan_extension.hpp"
#include "reedy.hpp"

namespace cosimplex {

/// Natural maps Delta^(n) x Delta[m] -> X.
inline EndHom tot(const MultiCosimplicial& x) {
  return end_hom(presentation(standard_multi(x.arity(), x.trunc(), x.cap())), presentation(x));
}

struct TotDiagonalVerdict {
  bool passed = true;
  std::string detail;
  std::vector<std::size_t> tot_counts, diag_counts;
};

/// Tot X -> Tot diag X, t |-> (k |-> t_(k,...,k) . (alpha_k x 1)), certified bijective and simplicial.
inline TotDiagonalVerdict tot_iso_diagonal(const MultiCosimplicial& x, const EndHom& tx, const EndHom& td) {
  const int cap = x.cap(), per = cap + 1, n = x.arity();
  TotDiagonalVerdict v;
  for (int m = 0; m <= cap; ++m) {
    v.tot_counts.push_back(tx.value.count(m));
    v.diag_counts.push_back(td.value.count(m));
  }
  std::vector<SSetMap> alpha;
  for (int k = 0; k <= x.trunc(); ++k) alpha.push_back(unit_alpha(k, n, cap));
  SSetMap comparison;
  for (int m = 0; m <= cap; ++m) {
    comparison.at.emplace_back();
    std::vector<int> flat(td.offset[m].back());
    for (std::size_t t = 0; t < tx.maps[m].size(); ++t) {
      for (int k = 0; k <= x.trunc(); ++k) {
        const int o = x.object(std::vector<int>(n, k));
        for (int j = 0; j <= cap; ++j) {
          const std::size_t nb = count_monotone(j, m);
          for (std::size_t a = 0; a < alpha[k].at[j].size(); ++a)
            for (std::size_t b = 0; b < nb; ++b)
              flat[td.offset[m][k * per + j] + a * nb + b] =
                  tx.eval(m, static_cast<int>(t), o, j, alpha[k].at[j][a], static_cast<int>(b));
        }
      }
      const int image = td.find(m, flat);
      if (image < 0) return {false, "image of simplex " + std::to_string(t) + " in dimension " + std::to_string(m) + " is not natural", v.tot_counts, v.diag_counts};
      comparison.at[m].push_back(image);
    }
  }
  auto iso = check_isomorphism(tx.value, td.value, comparison);
  v.passed = iso.passed;
  v.detail = iso.detail;
  return v;
}

inline TotDiagonalVerdict tot_iso_diagonal(const MultiCosimplicial& x) {
  return tot_iso_diagonal(x, tot(x), tot(diagonal(x)));
}

/// A chain of composable arrows in an overcategory of a degree tuple: objects tau_0, ..., tau_m
/// and labels sigma_j with tau_{j+1} . sigma_j = tau_j.
struct LabeledChain {
  std::vector<MultiMap> objects;
  std::vector<MultiMap> labels;
};

/// Nerve of ((Delta_{<=N})^n | target), with lookup of simplices by labeled chains.
struct OvercategoryNerve {
  std::vector<int> target;
  ProductOvercategory oc;
  Nerve nerve;
  std::unordered_map<MultiMap, int, MultiMapHash> object_index;
  std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> simplex_index;

  int arrow(int src, int tgt, const MultiMap& label) const {
    for (int a : oc.cat.out(src))
      if (oc.cat.arrow(a).tgt == tgt && oc.arrow_label[a] == label) return a;
    return -1;
  }

  LabeledChain chain(int m, int s) const {
    const auto& key = nerve.chains[m][s];
    LabeledChain c;
    if (m == 0) {
      c.objects.push_back(oc.objects[key[0]]);
      return c;
    }
    c.objects.push_back(oc.objects[oc.cat.arrow(key[0]).src]);
    for (int a : key) {
      c.objects.push_back(oc.objects[oc.cat.arrow(a).tgt]);
      c.labels.push_back(oc.arrow_label[a]);
    }
    return c;
  }

  /// Simplex index of a labeled chain, or -1.
  int locate(const LabeledChain& c) const {
    const int m = static_cast<int>(c.labels.size());
    std::vector<int> key;
    if (m == 0) {
      auto it = object_index.find(c.objects[0]);
      if (it == object_index.end()) return -1;
      key.push_back(it->second);
    } else {
      for (int j = 0; j < m; ++j) {
        auto s = object_index.find(c.objects[j]), t = object_index.find(c.objects[j + 1]);
        if (s == object_index.end() || t == object_index.end()) return -1;
        const int a = arrow(s->second, t->second, c.labels[j]);
        if (a < 0) return -1;
        key.push_back(a);
      }
    }
    auto it = simplex_index[m].find(key);
    return it == simplex_index[m].end() ? -1 : it->second;
  }
};

inline OvercategoryNerve overcategory_nerve(const std::vector<int>& target, int trunc, int cap) {
  OvercategoryNerve n;
  n.target = target;
  n.oc = product_overcategory(target, trunc);
  n.nerve = nerve(n.oc.cat, cap);
  for (std::size_t o = 0; o < n.oc.objects.size(); ++o) n.object_index.emplace(n.oc.objects[o], static_cast<int>(o));
  n.simplex_index.resize(cap + 1);
  for (int m = 0; m <= cap; ++m)
    for (std::size_t s = 0; s < n.nerve.chains[m].size(); ++s) n.simplex_index[m].emplace(n.nerve.chains[m][s], static_cast<int>(s));
  return n;
}

/// p |-> B((Delta_{<=N})^n | p) as a multicosimplicial simplicial set; operators act by postcomposition.
struct OvercategoryNerves {
  MultiCosimplicial value;
  std::vector<OvercategoryNerve> at;  ///< per object of (Delta_{<=N})^n
};

inline OvercategoryNerves overcategory_nerves(int arity, int trunc, int cap) {
  OvercategoryNerves b;
  std::size_t nobj = 1;
  for (int j = 0; j < arity; ++j) nobj *= static_cast<std::size_t>(trunc + 1);
  std::vector<int> p(arity, 0);
  for (std::size_t o = 0; o < nobj; ++o) {
    std::size_t r = o;
    for (int j = arity; j-- > 0;) {
      p[j] = static_cast<int>(r % static_cast<std::size_t>(trunc + 1));
      r /= static_cast<std::size_t>(trunc + 1);
    }
    b.at.push_back(overcategory_nerve(p, trunc, cap));
  }
  auto object = [&](const std::vector<int>& q) {
    std::size_t o = 0;
    for (int d : q) o = o * static_cast<std::size_t>(trunc + 1) + static_cast<std::size_t>(d);
    return o;
  };
  b.value = MultiCosimplicial::build(
      arity, trunc, cap, [&](const std::vector<int>& q) { return b.at[object(q)].nerve.sset; },
      [&](const MultiMap& beta) {
        const auto& src = b.at[object(beta.domain())];
        const auto& tgt = b.at[object(beta.codomain())];
        SSetMap f;
        for (int m = 0; m <= cap; ++m) {
          f.at.emplace_back();
          for (std::size_t s = 0; s < src.nerve.chains[m].size(); ++s) {
            auto c = src.chain(m, static_cast<int>(s));
            for (auto& t : c.objects) t = compose(beta, t);
            f.at[m].push_back(tgt.locate(c));
          }
        }
        return f;
      });
  return b;
}

/// Simplex of Delta[p_1] x ... x Delta[p_n] with vertex j at tau_j(top) in each coordinate, as a
/// product index.
inline int bk_formula(const std::vector<MultiMap>& objects, const std::vector<int>& target) {
  const int m = static_cast<int>(objects.size()) - 1;
  std::size_t idx = 0;
  for (std::size_t c = 0; c < target.size(); ++c) {
    std::vector<int> w;
    for (auto& tau : objects) w.push_back(tau[static_cast<int>(c)](tau[static_cast<int>(c)].domain()));
    idx = idx * count_monotone(m, target[c]) + monotone_rank(MonotoneMap(target[c], std::move(w)));
  }
  return static_cast<int>(idx);
}

/// The comparison B((Delta_{<=N})^n | -) -> Delta^(n), simplex by simplex.
inline MultiMorphism bk_map(const OvercategoryNerves& b) {
  MultiMorphism f;
  for (auto& n : b.at) {
    SSetMap g;
    for (int m = 0; m < static_cast<int>(n.nerve.chains.size()); ++m) {
      g.at.emplace_back();
      for (std::size_t s = 0; s < n.nerve.chains[m].size(); ++s) g.at[m].push_back(bk_formula(n.chain(m, static_cast<int>(s)).objects, n.target));
    }
    f.at.push_back(std::move(g));
  }
  return f;
}

/// The product comparison on a chain of (Delta_{<=N})^n | p: split the chain into its coordinate
/// chains, apply the one-variable comparison to each, and pair the results.
inline int product_bk_via_factors(const LabeledChain& c, const std::vector<int>& target, const OvercategoryNerves& one, const MultiMorphism& phi) {
  const int m = static_cast<int>(c.labels.size());
  std::size_t idx = 0;
  for (std::size_t j = 0; j < target.size(); ++j) {
    LabeledChain cj;
    for (auto& t : c.objects) cj.objects.push_back(MultiMap({t[static_cast<int>(j)]}));
    for (auto& s : c.labels) cj.labels.push_back(MultiMap({s[static_cast<int>(j)]}));
    const int s = one.at[target[j]].locate(cj);
    if (s < 0) return -1;
    idx = idx * count_monotone(m, target[j]) + static_cast<std::size_t>(phi.at[target[j]].at[m][s]);
  }
  return static_cast<int>(idx);
}

/// Chain of Delta_{<=N} | [k] pushed along the diagonal.
inline LabeledChain diagonal_chain(const LabeledChain& c, int arity) {
  LabeledChain d;
  for (auto& t : c.objects) d.objects.push_back(diagonal_embed(t[0], arity));
  for (auto& s : c.labels) d.labels.push_back(diagonal_embed(s[0], arity));
  return d;
}

struct BKSquareVerdict {
  bool passed = true;
  std::string naturality;  ///< empty when the one-variable comparison is natural
  std::size_t simplices_checked = 0;
  std::string detail;
};

/// phi^n . D_* = alpha . phi on B(Delta_{<=N} | [k]) for every k, with phi^n evaluated both by
/// the formula and through the coordinate split.
inline BKSquareVerdict check_bk_square(int arity, const OvercategoryNerves& one, const MultiMorphism& phi) {
  BKSquareVerdict v;
  const auto& c1 = one.value;
  v.naturality = naturality_defect(c1, standard_multi(1, c1.trunc(), c1.cap()), phi);
  if (!v.naturality.empty()) {
    v.passed = false;
    v.detail = "comparison is not natural: " + v.naturality;
    return v;
  }
  for (int k = 0; k <= c1.trunc(); ++k) {
    const auto alpha = unit_alpha(k, arity, c1.cap());
    const std::vector<int> target(arity, k);
    const auto& nk = one.at[k];
    for (int m = 0; m <= c1.cap(); ++m)
      for (std::size_t s = 0; s < nk.nerve.chains[m].size(); ++s) {
        auto d = diagonal_chain(nk.chain(m, static_cast<int>(s)), arity);
        const int lhs = bk_formula(d.objects, target);
        const int split = product_bk_via_factors(d, target, one, phi);
        const int rhs = alpha.at[m][phi.at[k].at[m][s]];
        ++v.simplices_checked;
        if (lhs != rhs || split != rhs) {
          v.passed = false;
          v.detail = "k=" + std::to_string(k) + " dimension " + std::to_string(m) + " simplex " + std::to_string(s);
          return v;
        }
      }
  }
  return v;
}

/// Natural maps B((Delta_{<=N})^n | -) x Delta[m] -> X.
inline EndHom holim(const MultiCosimplicial& x, const OvercategoryNerves& b) { return end_hom(presentation(b.value), presentation(x)); }

/// holim X -> holim diag X: precompose with D_* x 1 at each diagonal degree.
inline SSetMap holim_restriction_map(const MultiCosimplicial& x, const OvercategoryNerves& bn, const EndHom& hx, const OvercategoryNerves& b1, const EndHom& hd) {
  const int cap = x.cap(), per = cap + 1, n = x.arity();
  SSetMap r;
  for (int m = 0; m <= cap; ++m) {
    r.at.emplace_back();
    std::vector<int> flat(hd.offset[m].back());
    for (std::size_t t = 0; t < hx.maps[m].size(); ++t) {
      for (int k = 0; k <= x.trunc(); ++k) {
        const int o = x.object(std::vector<int>(n, k));
        for (int j = 0; j <= cap; ++j) {
          const std::size_t nb = count_monotone(j, m);
          for (std::size_t c = 0; c < b1.at[k].nerve.chains[j].size(); ++c) {
            const int a = bn.at[o].locate(diagonal_chain(b1.at[k].chain(j, static_cast<int>(c)), n));
            if (a < 0) throw std::logic_error("holim_restriction_map: diagonal chain not found");
            for (std::size_t bb = 0; bb < nb; ++bb)
              flat[hd.offset[m][k * per + j] + c * nb + bb] = hx.eval(m, static_cast<int>(t), o, j, a, static_cast<int>(bb));
          }
        }
      }
      r.at[m].push_back(hd.find(m, flat));
    }
  }
  return r;
}

struct HomSquareVerdict {
  bool passed = true;
  std::size_t elements = 0, evaluations = 0;
  bool checked_membership = false;
  std::string detail;
};

/// For every t in Tot X, the two composites to holim diag X agree: t . (alpha phi x 1) against
/// t . (phi^n D_* x 1), evaluated on B(Delta_{<=N} | [k]) x Delta[m]. If hd is given, the common
/// image is also located in holim diag X.
inline HomSquareVerdict check_homset_square(const MultiCosimplicial& x, const EndHom& tx, const OvercategoryNerves& one, const MultiMorphism& phi,
                                            const EndHom* hd = nullptr) {
  const int cap = x.cap(), per = cap + 1, n = x.arity();
  HomSquareVerdict v;
  v.checked_membership = hd != nullptr;
  std::vector<SSetMap> alpha;
  std::vector<std::vector<std::vector<int>>> via_split(x.trunc() + 1);
  for (int k = 0; k <= x.trunc(); ++k) {
    alpha.push_back(unit_alpha(k, n, cap));
    const std::vector<int> target(n, k);
    via_split[k].resize(cap + 1);
    for (int j = 0; j <= cap; ++j)
      for (std::size_t c = 0; c < one.at[k].nerve.chains[j].size(); ++c)
        via_split[k][j].push_back(product_bk_via_factors(diagonal_chain(one.at[k].chain(j, static_cast<int>(c)), n), target, one, phi));
  }
  for (int m = 0; m <= cap; ++m) {
    std::vector<int> flat(hd ? hd->offset[m].back() : 0);
    for (std::size_t t = 0; t < tx.maps[m].size(); ++t) {
      ++v.elements;
      for (int k = 0; k <= x.trunc(); ++k) {
        const int o = x.object(std::vector<int>(n, k));
        for (int j = 0; j <= cap; ++j) {
          const std::size_t nb = count_monotone(j, m);
          for (std::size_t c = 0; c < via_split[k][j].size(); ++c)
            for (std::size_t b = 0; b < nb; ++b) {
              const int lhs = tx.eval(m, static_cast<int>(t), o, j, alpha[k].at[j][phi.at[k].at[j][c]], static_cast<int>(b));
              const int rhs = tx.eval(m, static_cast<int>(t), o, j, via_split[k][j][c], static_cast<int>(b));
              ++v.evaluations;
              if (lhs != rhs) {
                v.passed = false;
                v.detail = "dimension " + std::to_string(m) + " element " + std::to_string(t) + " differs at k=" + std::to_string(k);
                return v;
              }
              if (hd) flat[hd->offset[m][k * per + j] + c * nb + b] = lhs;
            }
        }
      }
      if (hd && hd->find(m, flat) < 0) {
        v.passed = false;
        v.detail = "dimension " + std::to_string(m) + " element " + std::to_string(t) + " does not land in holim diag X";
        return v;
      }
    }
  }
  return v;
}

/// Hom-set square over Tot X; membership in holim diag X is checked when diag X has at most
/// membership_limit simplices in total.
inline HomSquareVerdict check_homset_square(const MultiCosimplicial& x, const OvercategoryNerves& one, const MultiMorphism& phi,
                                            std::size_t membership_limit) {
  auto dx = diagonal(x);
  std::size_t size = 0;
  for (auto& v : dx.values()) size += v.total();
  if (size > membership_limit) return check_homset_square(x, tot(x), one, phi);
  auto hd = holim(dx, one);
  return check_homset_square(x, tot(x), one, phi, &hd);
}

struct ProductIsoVerdict {
  bool passed = true;
  std::size_t objects = 0, morphisms = 0;
  std::vector<std::size_t> nerve_counts;
  std::string detail;
};

/// ((Delta_{<=N})^n | p) against the product of the (Delta_{<=N} | p_j): explicit isomorphism of
/// categories, then of truncated nerves.
inline ProductIsoVerdict overcategory_product_iso(const std::vector<int>& target, int trunc, int cap) {
  ProductIsoVerdict v;
  const int n = static_cast<int>(target.size());
  auto joint = product_overcategory(target, trunc);
  std::vector<DiagonalOvercategory> factor;
  for (int p : target) factor.push_back(simplex_overcategory(p, trunc));
  // fold the factors left to right; arrow tuples index the folded arrows
  FinCat folded = factor[0].cat;
  std::vector<std::vector<int>> tuple_of(folded.num_morphisms());
  for (std::size_t a = 0; a < folded.num_morphisms(); ++a) tuple_of[a] = {static_cast<int>(a)};
  std::unordered_map<std::vector<int>, int, VectorHash> arrow_of_tuple;
  for (int j = 1; j < n; ++j) {
    std::vector<int> pm;
    const std::size_t mb = factor[j].cat.num_morphisms();
    FinCat next = FinCat::product(folded, factor[j].cat, &pm);
    std::vector<std::vector<int>> t(next.num_morphisms());
    for (std::size_t f = 0; f < folded.num_morphisms(); ++f)
      for (std::size_t g = 0; g < mb; ++g) {
        auto tup = tuple_of[f];
        tup.push_back(static_cast<int>(g));
        t[pm[f * mb + g]] = std::move(tup);
      }
    folded = std::move(next);
    tuple_of = std::move(t);
  }
  for (std::size_t a = 0; a < tuple_of.size(); ++a) arrow_of_tuple.emplace(tuple_of[a], static_cast<int>(a));
  std::vector<std::unordered_map<MonotoneMap, int, MonotoneMapHash>> factor_object(n);
  for (int j = 0; j < n; ++j)
    for (std::size_t o = 0; o < factor[j].objects.size(); ++o) factor_object[j].emplace(factor[j].objects[o][0], static_cast<int>(o));
  v.objects = joint.objects.size();
  v.morphisms = joint.cat.num_morphisms();
  if (v.objects != folded.num_objects() || v.morphisms != folded.num_morphisms()) {
    v.passed = false;
    v.detail = "sizes differ";
    return v;
  }
  std::vector<int> obj(joint.objects.size());
  std::vector<char> hit_obj(folded.num_objects(), 0);
  for (std::size_t o = 0; o < joint.objects.size(); ++o) {
    int idx = 0;
    for (int j = 0; j < n; ++j) idx = idx * static_cast<int>(factor[j].objects.size()) + factor_object[j].at(joint.objects[o][j]);
    obj[o] = idx;
    hit_obj[idx] = 1;
  }
  auto factor_arrow = [&](int j, int s, int t, const MonotoneMap& label) {
    for (int a : factor[j].cat.out(s))
      if (factor[j].cat.arrow(a).tgt == t && factor[j].arrow_label[a] == label) return a;
    return -1;
  };
  std::vector<int> mor(joint.cat.num_morphisms());
  std::vector<char> hit_mor(folded.num_morphisms(), 0);
  for (std::size_t a = 0; a < joint.cat.num_morphisms(); ++a) {
    const Arrow& ar = joint.cat.arrow(static_cast<int>(a));
    std::vector<int> tup;
    for (int j = 0; j < n; ++j) {
      const int s = factor_object[j].at(joint.objects[ar.src][j]), t = factor_object[j].at(joint.objects[ar.tgt][j]);
      tup.push_back(factor_arrow(j, s, t, joint.arrow_label[a][j]));
    }
    auto it = arrow_of_tuple.find(tup);
    if (it == arrow_of_tuple.end()) {
      v.passed = false;
      v.detail = "arrow " + std::to_string(a) + " has no image";
      return v;
    }
    mor[a] = it->second;
    const Arrow& fa = folded.arrow(it->second);
    if (fa.src != obj[ar.src] || fa.tgt != obj[ar.tgt] || hit_mor[it->second]) {
      v.passed = false;
      v.detail = "arrow " + std::to_string(a) + " is not mapped bijectively over the object map";
      return v;
    }
    hit_mor[it->second] = 1;
  }
  if (std::find(hit_obj.begin(), hit_obj.end(), 0) != hit_obj.end()) {
    v.passed = false;
    v.detail = "object map is not surjective";
    return v;
  }
  bool composition = true;
  joint.cat.for_each_composite([&](int g, int f, int gf) { composition = composition && folded.compose(mor[g], mor[f]) == mor[gf]; });
  if (!composition) {
    v.passed = false;
    v.detail = "composition is not preserved";
    return v;
  }
  auto na = nerve(joint.cat, cap), nb = nerve(folded, cap);
  std::unordered_map<std::vector<int>, int, VectorHash> index_b;
  SSetMap f;
  for (int m = 0; m <= cap; ++m) {
    v.nerve_counts.push_back(na.sset.count(m));
    index_b.clear();
    for (std::size_t s = 0; s < nb.chains[m].size(); ++s) index_b.emplace(nb.chains[m][s], static_cast<int>(s));
    f.at.emplace_back();
    for (auto& ch : na.chains[m]) {
      std::vector<int> img;
      for (int a : ch) img.push_back(m == 0 ? obj[a] : mor[a]);
      auto it = index_b.find(img);
      f.at[m].push_back(it == index_b.end() ? -1 : it->second);
    }
  }
  for (auto& level : f.at)
    if (std::find(level.begin(), level.end(), -1) != level.end()) {
      v.passed = false;
      v.detail = "nerve map is not defined everywhere";
      return v;
    }
  auto iso = check_isomorphism(na.sset, nb.sset, f);
  v.passed = iso.passed;
  v.detail = iso.detail;
  return v;
}

struct HomotopyCofinalityVerdict {
  bool passed = true;
  std::vector<int> target;
  std::size_t objects = 0, components = 0;
  BettiProfile betti;
};

/// Proxy for homotopy left cofinality of the diagonal at a degree tuple: the nerve of the
/// overcategory is connected with vanishing reduced Betti numbers below the cap.
inline HomotopyCofinalityVerdict homotopy_cofinality_proxy(const std::vector<int>& target, int trunc, int cap) {
  HomotopyCofinalityVerdict v;
  v.target = target;
  auto oc = diagonal_overcategory(target, trunc);
  v.objects = oc.objects.size();
  auto n = nerve(oc.cat, cap);
  v.components = static_cast<std::size_t>(path_components(n.sset).count);
  v.betti = betti(n.sset);
  v.passed = v.components == 1 && v.betti.acyclic();
  return v;
}

}  // namespace cosimplex
