#pragma once

#include <unordered_map>
#include <vector>

#include "categories.hpp"
#include "cosimplicial.hpp"
#include "diagrams.hpp"
#include "ends.hpp"
#include "reedy.hpp"

namespace cosimplex {

/// Pointwise left Kan extension along the diagonal, with the colimit data per object.
struct KanExtension {
  MultiCosimplicial value;
  std::vector<DiagonalOvercategory> overcategories;  ///< per object of (Delta_{<=N})^n
  std::vector<SSetColimit> colimits;
};

namespace detail {

inline SSetColimit overcategory_colimit(const MultiCosimplicial& c, const DiagonalOvercategory& oc) {
  auto shape = std::make_shared<FinCat>(oc.cat);
  SSetDiagram d{shape, {}, {}, c.cap()};
  for (std::size_t o = 0; o < oc.objects.size(); ++o) d.values.push_back(c.value({oc.degree(static_cast<int>(o))}));
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m)
    d.maps.push_back(c.structure_map(MultiMap{{oc.arrow_label[m]}}));
  return colimit(d);
}

}  // namespace detail

/// Value at [p] is the colimit over (Delta_{<=N} | [p]) of C at the domain degree.
inline KanExtension left_kan_extend(const MultiCosimplicial& c, int arity) {
  if (c.arity() != 1) throw std::invalid_argument("left_kan_extend: expects a cosimplicial object");
  KanExtension ke;
  const int trunc = c.trunc();
  std::size_t nobj = 1;
  for (int j = 0; j < arity; ++j) nobj *= static_cast<std::size_t>(trunc + 1);
  std::vector<std::unordered_map<MultiMap, int, MultiMapHash>> find(nobj);
  auto degrees = [&](std::size_t o) {
    std::vector<int> p(arity);
    for (int j = arity; j-- > 0;) {
      p[j] = static_cast<int>(o % static_cast<std::size_t>(trunc + 1));
      o /= static_cast<std::size_t>(trunc + 1);
    }
    return p;
  };
  auto object = [&](const std::vector<int>& p) {
    std::size_t o = 0;
    for (int d : p) o = o * static_cast<std::size_t>(trunc + 1) + static_cast<std::size_t>(d);
    return o;
  };
  for (std::size_t o = 0; o < nobj; ++o) {
    ke.overcategories.push_back(diagonal_overcategory(degrees(o), trunc));
    ke.colimits.push_back(detail::overcategory_colimit(c, ke.overcategories.back()));
    for (std::size_t a = 0; a < ke.overcategories[o].objects.size(); ++a) find[o][ke.overcategories[o].objects[a]] = static_cast<int>(a);
  }
  ke.value = MultiCosimplicial::build(
      arity, trunc, c.cap(), [&](const std::vector<int>& p) { return ke.colimits[object(p)].value; },
      [&](const MultiMap& beta) {
        const std::size_t s = object(beta.domain()), t = object(beta.codomain());
        const auto& src = ke.colimits[s];
        const auto& ocs = ke.overcategories[s];
        SSetMap f;
        for (int m = 0; m <= c.cap(); ++m) f.at.emplace_back(src.value.count(m), -1);
        for (std::size_t a = 0; a < ocs.objects.size(); ++a) {
          const int b = find[t].at(compose(beta, ocs.objects[a]));
          for (int m = 0; m <= c.cap(); ++m)
            for (std::size_t x = 0; x < src.injection[a].at[m].size(); ++x)
              f.at[m][src.injection[a].at[m][x]] = ke.colimits[t].injection[b].at[m][x];
        }
        return f;
      });
  return ke;
}

/// Comparison from the Kan extension of the standard simplex to the standard n-cosimplicial
/// object: the class of (alpha, theta) goes to (alpha_1 theta, ..., alpha_n theta).
inline MultiMorphism kan_comparison(const KanExtension& ke) {
  MultiMorphism f;
  const int cap = ke.value.cap();
  for (std::size_t o = 0; o < ke.overcategories.size(); ++o) {
    const auto& oc = ke.overcategories[o];
    const auto& col = ke.colimits[o];
    SSetMap g;
    for (int m = 0; m <= cap; ++m) g.at.emplace_back(col.value.count(m), -1);
    for (std::size_t a = 0; a < oc.objects.size(); ++a) {
      const auto& alpha = oc.objects[a];
      const int k = oc.degree(static_cast<int>(a));
      for (int m = 0; m <= cap; ++m) {
        auto thetas = enumerate_monotone(m, k);
        for (std::size_t x = 0; x < thetas.size(); ++x) {
          std::size_t idx = 0;
          for (int j = 0; j < alpha.arity(); ++j)
            idx = idx * count_monotone(m, alpha[j].codomain()) + monotone_rank(compose(alpha[j], thetas[x]));
          g.at[m][col.injection[a].at[m][x]] = static_cast<int>(idx);
        }
      }
    }
    f.at.push_back(std::move(g));
  }
  return f;
}

struct KanIdentityVerdict {
  bool passed = true;
  std::string detail;
  std::vector<int> failing_at;
};

/// The Kan extension of the standard simplex agrees with the standard n-cosimplicial object:
/// the comparison is natural and bijective at every object.
inline KanIdentityVerdict check_kan_extension_identity(int arity, int trunc, int cap) {
  auto delta = standard_multi(1, trunc, cap);
  auto ke = left_kan_extend(delta, arity);
  auto target = standard_multi(arity, trunc, cap);
  auto f = kan_comparison(ke);
  KanIdentityVerdict v;
  auto nat = naturality_defect(ke.value, target, f);
  if (!nat.empty()) return {false, nat, {}};
  for (std::size_t o = 0; o < target.num_objects(); ++o) {
    auto iso = check_isomorphism(ke.value.value(static_cast<int>(o)), target.value(static_cast<int>(o)), f.at[o]);
    if (!iso.passed) return {false, iso.detail, target.degrees(static_cast<int>(o))};
  }
  return v;
}

/// Delta[k] -> Delta[k]^n, theta |-> (theta, ..., theta).
inline SSetMap unit_alpha(int k, int arity, int cap) {
  SSetMap f;
  for (int m = 0; m <= cap; ++m) {
    const std::size_t c = count_monotone(m, k);
    f.at.emplace_back(c);
    for (std::size_t x = 0; x < c; ++x) {
      std::size_t idx = 0;
      for (int j = 0; j < arity; ++j) idx = idx * c + x;
      f.at[m][x] = static_cast<int>(idx);
    }
  }
  return f;
}

/// The unit as a map of cosimplicial objects Delta -> diag Delta^(n).
inline MultiMorphism unit_transformation(int arity, int trunc, int cap) {
  MultiMorphism f;
  for (int k = 0; k <= trunc; ++k) f.at.push_back(unit_alpha(k, arity, cap));
  return f;
}

/// Maps Delta^(n) -> X against maps Delta -> diag X under f |-> (diag f) . alpha.
struct AdjunctionVerdict {
  bool passed = true;
  std::size_t left = 0, right = 0;
  bool injective = true, surjective = true;
  std::string detail;
};

inline AdjunctionVerdict adjunction_bijection(const MultiCosimplicial& x) {
  auto dn = standard_multi(x.arity(), x.trunc(), x.cap());
  auto d1 = standard_multi(1, x.trunc(), x.cap());
  auto dx = diagonal(x);
  std::vector<std::size_t> off_left, off_right;
  auto left = all_natural_maps(presentation(dn), presentation(x), &off_left);
  auto right = all_natural_maps(presentation(d1), presentation(dx), &off_right);
  std::unordered_map<std::vector<int>, int, VectorHash> index;
  for (std::size_t r = 0; r < right.size(); ++r) index.emplace(right[r], static_cast<int>(r));
  AdjunctionVerdict v;
  v.left = left.size();
  v.right = right.size();
  const int cap = x.cap(), per = cap + 1;
  std::vector<char> hit(right.size(), 0);
  std::vector<SSetMap> alpha;
  for (int k = 0; k <= x.trunc(); ++k) alpha.push_back(unit_alpha(k, x.arity(), cap));
  for (auto& f : left) {
    std::vector<int> flat(off_right.back());
    for (int k = 0; k <= x.trunc(); ++k) {
      const int o = x.object(std::vector<int>(x.arity(), k));
      for (int m = 0; m <= cap; ++m)
        for (std::size_t s = 0; s < alpha[k].at[m].size(); ++s)
          flat[off_right[k * per + m] + s] = f[off_left[o * per + m] + alpha[k].at[m][s]];
    }
    auto it = index.find(flat);
    if (it == index.end()) {
      v.passed = false;
      v.detail = "image is not a map of cosimplicial objects";
      return v;
    }
    if (hit[it->second]) v.injective = false;
    hit[it->second] = 1;
  }
  for (char h : hit) v.surjective = v.surjective && h;
  v.passed = v.injective && v.surjective;
  if (!v.passed) v.detail = std::to_string(v.left) + " maps on the left, " + std::to_string(v.right) + " on the right";
  return v;
}

}  // namespace cosimplex
