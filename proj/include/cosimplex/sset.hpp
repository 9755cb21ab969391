#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "delta.hpp"

namespace cosimplex {

class SimplicialIdentityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simplicial set truncated at a dimension cap: simplices of dimension 0..cap, degenerate
/// ones included, with explicit face and degeneracy tables.
class TruncSSet {
 public:
  TruncSSet() : TruncSSet(0) {}
  explicit TruncSSet(int cap) : cap_(cap), count_(cap + 1, 0), face_(cap + 1), degen_(cap + 1) {
    if (cap < 0) throw std::invalid_argument("dimension cap must be nonnegative");
    for (int m = 1; m <= cap; ++m) face_[m].assign(m + 1, {});
    for (int m = 0; m < cap; ++m) degen_[m].assign(m + 1, {});
  }

  int cap() const { return cap_; }
  std::size_t count(int m) const { return count_[m]; }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto c : count_) t += c;
    return t;
  }
  bool empty() const { return count_[0] == 0; }

  /// d_i : X_m -> X_{m-1}
  int face(int m, int i, int x) const { return face_[m][i][x]; }
  /// s_i : X_m -> X_{m+1}
  int degen(int m, int i, int x) const { return degen_[m][i][x]; }
  const std::vector<int>& face_table(int m, int i) const { return face_[m][i]; }
  const std::vector<int>& degen_table(int m, int i) const { return degen_[m][i]; }

  void set_count(int m, std::size_t n) { count_[m] = n; }
  std::vector<int>& face_table(int m, int i) { return face_[m][i]; }
  std::vector<int>& degen_table(int m, int i) { return degen_[m][i]; }

  /// theta^*(x) for theta : [m] -> [k] and x in X_k (both m, k within the cap).
  int act(const MonotoneMap& theta, int x) const {
    auto [epi, mono] = epi_mono_factor(theta);
    int dim = mono.codomain();
    std::vector<char> hit(dim + 1, 0);
    for (int v : mono.images()) hit[v] = 1;
    for (int v = dim; v >= 0; --v)
      if (!hit[v]) x = face(dim--, v, x);
    for (int u : collapse_set(epi)) x = degen(dim++, u, x);
    return x;
  }

  std::vector<char> degenerate_mask(int m) const {
    std::vector<char> mask(count_[m], 0);
    if (m == 0) return mask;
    for (int i = 0; i < m; ++i)
      for (int y : degen_[m - 1][i]) mask[y] = 1;
    return mask;
  }

  std::size_t nondegenerate_count(int m) const {
    auto mask = degenerate_mask(m);
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 0));
  }

  std::vector<std::size_t> nondegenerate_counts() const {
    std::vector<std::size_t> v;
    for (int m = 0; m <= cap_; ++m) v.push_back(nondegenerate_count(m));
    return v;
  }

  /// Checks table shapes and every simplicial identity that lives inside the cap.
  void validate() const {
    auto fail = [](const std::string& what, int m, int x) {
      throw SimplicialIdentityError("simplicial identity " + what + " fails on simplex " + std::to_string(x) +
                                    " of dimension " + std::to_string(m));
    };
    for (int m = 1; m <= cap_; ++m)
      for (int i = 0; i <= m; ++i) {
        if (face_[m][i].size() != count_[m])
          throw SimplicialIdentityError("face table d_" + std::to_string(i) + " in dimension " + std::to_string(m) +
                                        " has wrong length");
        for (int y : face_[m][i])
          if (y < 0 || static_cast<std::size_t>(y) >= count_[m - 1])
            throw SimplicialIdentityError("face d_" + std::to_string(i) + " in dimension " + std::to_string(m) +
                                          " points outside dimension " + std::to_string(m - 1));
      }
    for (int m = 0; m < cap_; ++m)
      for (int i = 0; i <= m; ++i) {
        if (degen_[m][i].size() != count_[m])
          throw SimplicialIdentityError("degeneracy table s_" + std::to_string(i) + " in dimension " +
                                        std::to_string(m) + " has wrong length");
        for (int y : degen_[m][i])
          if (y < 0 || static_cast<std::size_t>(y) >= count_[m + 1])
            throw SimplicialIdentityError("degeneracy s_" + std::to_string(i) + " in dimension " +
                                          std::to_string(m) + " points outside dimension " + std::to_string(m + 1));
      }
    auto s = [](int i) { return std::to_string(i); };
    // d_i d_j = d_{j-1} d_i for i < j
    for (int m = 2; m <= cap_; ++m)
      for (int j = 1; j <= m; ++j)
        for (int i = 0; i < j; ++i)
          for (std::size_t x = 0; x < count_[m]; ++x)
            if (face(m - 1, i, face(m, j, x)) != face(m - 1, j - 1, face(m, i, x)))
              fail("d_" + s(i) + " d_" + s(j) + " = d_" + s(j - 1) + " d_" + s(i), m, static_cast<int>(x));
    for (int m = 0; m < cap_; ++m)
      for (int j = 0; j <= m; ++j)
        for (std::size_t x = 0; x < count_[m]; ++x) {
          int y = degen(m, j, static_cast<int>(x));
          for (int i = 0; i <= m + 1; ++i) {
            int lhs = face(m + 1, i, y);
            if (i == j || i == j + 1) {
              if (lhs != static_cast<int>(x)) fail("d_" + s(i) + " s_" + s(j) + " = id", m, static_cast<int>(x));
            } else if (i < j) {
              if (lhs != degen(m - 1, j - 1, face(m, i, static_cast<int>(x))))
                fail("d_" + s(i) + " s_" + s(j) + " = s_" + s(j - 1) + " d_" + s(i), m, static_cast<int>(x));
            } else {
              if (lhs != degen(m - 1, j, face(m, i - 1, static_cast<int>(x))))
                fail("d_" + s(i) + " s_" + s(j) + " = s_" + s(j) + " d_" + s(i - 1), m, static_cast<int>(x));
            }
          }
          if (m + 1 < cap_)
            for (int i = 0; i <= j; ++i)
              if (degen(m + 1, i, y) != degen(m + 1, j + 1, degen(m, i, static_cast<int>(x))))
                fail("s_" + s(i) + " s_" + s(j) + " = s_" + s(j + 1) + " s_" + s(i), m, static_cast<int>(x));
        }
  }

  friend bool operator==(const TruncSSet&, const TruncSSet&) = default;

 private:
  int cap_;
  std::vector<std::size_t> count_;
  std::vector<std::vector<std::vector<int>>> face_;
  std::vector<std::vector<std::vector<int>>> degen_;
};

/// Map of truncated simplicial sets, one index table per dimension.
struct SSetMap {
  std::vector<std::vector<int>> at;

  int operator()(int m, int x) const { return at[m][x]; }
  friend bool operator==(const SSetMap&, const SSetMap&) = default;
};

inline SSetMap identity_map(const TruncSSet& a) {
  SSetMap f;
  for (int m = 0; m <= a.cap(); ++m) {
    f.at.emplace_back(a.count(m));
    for (std::size_t x = 0; x < a.count(m); ++x) f.at[m][x] = static_cast<int>(x);
  }
  return f;
}

/// g . f
/// The unique map to the point.
inline SSetMap map_to_point(const TruncSSet& a) {
  SSetMap f;
  for (int m = 0; m <= a.cap(); ++m) f.at.emplace_back(a.count(m), 0);
  return f;
}

inline SSetMap compose(const SSetMap& g, const SSetMap& f) {
  SSetMap h;
  for (std::size_t m = 0; m < f.at.size(); ++m) {
    h.at.emplace_back(f.at[m].size());
    for (std::size_t x = 0; x < f.at[m].size(); ++x) h.at[m][x] = g.at[m][f.at[m][x]];
  }
  return h;
}

/// Empty string when f : a -> b is simplicial, otherwise a description of the first failure.
inline std::string simplicial_map_defect(const TruncSSet& a, const TruncSSet& b, const SSetMap& f) {
  if (a.cap() != b.cap() || static_cast<int>(f.at.size()) != a.cap() + 1) return "caps differ";
  for (int m = 0; m <= a.cap(); ++m) {
    if (f.at[m].size() != a.count(m)) return "table size mismatch in dimension " + std::to_string(m);
    for (int y : f.at[m])
      if (y < 0 || static_cast<std::size_t>(y) >= b.count(m)) return "value out of range in dimension " + std::to_string(m);
  }
  for (int m = 0; m <= a.cap(); ++m)
    for (std::size_t x = 0; x < a.count(m); ++x) {
      int fx = f.at[m][x];
      for (int i = 0; m > 0 && i <= m; ++i)
        if (f.at[m - 1][a.face(m, i, static_cast<int>(x))] != b.face(m, i, fx))
          return "face d_" + std::to_string(i) + " not preserved in dimension " + std::to_string(m);
      for (int i = 0; m < a.cap() && i <= m; ++i)
        if (f.at[m + 1][a.degen(m, i, static_cast<int>(x))] != b.degen(m, i, fx))
          return "degeneracy s_" + std::to_string(i) + " not preserved in dimension " + std::to_string(m);
    }
  return {};
}

inline bool is_simplicial_map(const TruncSSet& a, const TruncSSet& b, const SSetMap& f) {
  return simplicial_map_defect(a, b, f).empty();
}

inline bool is_injective(const SSetMap& f, const TruncSSet& b) {
  for (std::size_t m = 0; m < f.at.size(); ++m) {
    std::vector<char> seen(b.count(static_cast<int>(m)), 0);
    for (int y : f.at[m]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

inline bool is_bijective(const SSetMap& f, const TruncSSet& b) {
  for (std::size_t m = 0; m < f.at.size(); ++m)
    if (f.at[m].size() != b.count(static_cast<int>(m))) return false;
  return is_injective(f, b);
}

/// Builds a truncated simplicial set from per-dimension simplex keys and key-level operators.
template <class Key, class Hash = std::hash<Key>>
struct KeyedBuilder {
  int cap;
  std::vector<std::vector<Key>> keys;
  std::vector<std::unordered_map<Key, int, Hash>> index;

  explicit KeyedBuilder(int c) : cap(c), keys(c + 1), index(c + 1) {}

  int add(int m, const Key& k) {
    auto [it, fresh] = index[m].emplace(k, static_cast<int>(keys[m].size()));
    if (fresh) keys[m].push_back(k);
    return it->second;
  }

  int find(int m, const Key& k) const {
    auto it = index[m].find(k);
    if (it == index[m].end()) throw std::out_of_range("simplex key not present in dimension " + std::to_string(m));
    return it->second;
  }

  template <class Face, class Degen>
  TruncSSet build(Face&& face, Degen&& degen) const {
    TruncSSet x(cap);
    for (int m = 0; m <= cap; ++m) x.set_count(m, keys[m].size());
    for (int m = 1; m <= cap; ++m)
      for (int i = 0; i <= m; ++i) {
        auto& t = x.face_table(m, i);
        t.resize(keys[m].size());
        for (std::size_t s = 0; s < keys[m].size(); ++s) t[s] = find(m - 1, face(m, i, keys[m][s]));
      }
    for (int m = 0; m < cap; ++m)
      for (int i = 0; i <= m; ++i) {
        auto& t = x.degen_table(m, i);
        t.resize(keys[m].size());
        for (std::size_t s = 0; s < keys[m].size(); ++s) t[s] = find(m + 1, degen(m, i, keys[m][s]));
      }
    return x;
  }
};

inline TruncSSet point(int cap) {
  TruncSSet x(cap);
  for (int m = 0; m <= cap; ++m) x.set_count(m, 1);
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) x.face_table(m, i) = {0};
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) x.degen_table(m, i) = {0};
  return x;
}

inline TruncSSet empty_sset(int cap) {
  TruncSSet x(cap);
  return x;
}

/// Discrete simplicial set on n points.
inline TruncSSet discrete(int n, int cap) {
  TruncSSet x(cap);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  for (int m = 0; m <= cap; ++m) x.set_count(m, n);
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) x.face_table(m, i) = ids;
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) x.degen_table(m, i) = ids;
  return x;
}

/// Delta[k] truncated at cap; m-simplices are monotone maps [m] -> [k] indexed by monotone_rank.
inline TruncSSet standard_simplex(int k, int cap) {
  if (k < 0) throw std::invalid_argument("standard_simplex: negative degree");
  TruncSSet x(cap);
  std::vector<std::vector<MonotoneMap>> s(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    s[m] = enumerate_monotone(m, k);
    x.set_count(m, s[m].size());
  }
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto d = MonotoneMap::coface(m, i);
      auto& t = x.face_table(m, i);
      t.resize(s[m].size());
      for (std::size_t a = 0; a < s[m].size(); ++a) t[a] = static_cast<int>(monotone_rank(compose(s[m][a], d)));
    }
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto sg = MonotoneMap::codegeneracy(m, i);
      auto& t = x.degen_table(m, i);
      t.resize(s[m].size());
      for (std::size_t a = 0; a < s[m].size(); ++a) t[a] = static_cast<int>(monotone_rank(compose(s[m][a], sg)));
    }
  return x;
}

/// Map Delta[k] -> Delta[l] given by post-composition with theta : [k] -> [l].
inline SSetMap standard_simplex_map(const MonotoneMap& theta, int cap) {
  SSetMap f;
  for (int m = 0; m <= cap; ++m) {
    auto s = enumerate_monotone(m, theta.domain());
    f.at.emplace_back(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) f.at[m][a] = static_cast<int>(monotone_rank(compose(theta, s[a])));
  }
  return f;
}

/// Sub-simplicial set on the marked simplices; the marks must be closed under faces and degeneracies.
/// Fills the inclusion map when requested.
inline TruncSSet subobject(const TruncSSet& a, const std::vector<std::vector<char>>& keep, SSetMap* inclusion = nullptr) {
  const int cap = a.cap();
  std::vector<std::vector<int>> local(cap + 1);
  SSetMap inc;
  TruncSSet x(cap);
  for (int m = 0; m <= cap; ++m) {
    local[m].assign(a.count(m), -1);
    inc.at.emplace_back();
    for (std::size_t s = 0; s < a.count(m); ++s)
      if (keep[m][s]) {
        local[m][s] = static_cast<int>(inc.at[m].size());
        inc.at[m].push_back(static_cast<int>(s));
      }
    x.set_count(m, inc.at[m].size());
  }
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i)
      for (int s : inc.at[m]) {
        int y = local[m - 1][a.face(m, i, s)];
        if (y < 0) throw std::invalid_argument("subobject: marked simplices are not closed under faces");
        x.face_table(m, i).push_back(y);
      }
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i)
      for (int s : inc.at[m]) {
        int y = local[m + 1][a.degen(m, i, s)];
        if (y < 0) throw std::invalid_argument("subobject: marked simplices are not closed under degeneracies");
        x.degen_table(m, i).push_back(y);
      }
  if (inclusion) *inclusion = std::move(inc);
  return x;
}

/// Closes marks under faces and degeneracies.
inline void close_marks(const TruncSSet& a, std::vector<std::vector<char>>& keep) {
  for (int m = a.cap(); m >= 1; --m)
    for (std::size_t s = 0; s < a.count(m); ++s)
      if (keep[m][s])
        for (int i = 0; i <= m; ++i) keep[m - 1][a.face(m, i, static_cast<int>(s))] = 1;
  for (int m = 0; m < a.cap(); ++m)
    for (std::size_t s = 0; s < a.count(m); ++s)
      if (keep[m][s])
        for (int i = 0; i <= m; ++i) keep[m + 1][a.degen(m, i, static_cast<int>(s))] = 1;
}

/// Sub-simplicial set generated by simplices of dimension <= j.
inline TruncSSet skeleton(const TruncSSet& a, int j, SSetMap* inclusion = nullptr) {
  std::vector<std::vector<char>> keep(a.cap() + 1);
  for (int m = 0; m <= a.cap(); ++m) keep[m].assign(a.count(m), m <= j ? 1 : 0);
  close_marks(a, keep);
  return subobject(a, keep, inclusion);
}

inline TruncSSet zero_skeleton(const TruncSSet& a, SSetMap* inclusion = nullptr) { return skeleton(a, 0, inclusion); }

/// Boundary of Delta[k]: non-surjective simplices.
inline TruncSSet boundary(int k, int cap, SSetMap* inclusion = nullptr) {
  auto d = standard_simplex(k, cap);
  std::vector<std::vector<char>> keep(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    auto s = enumerate_monotone(m, k);
    keep[m].resize(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) keep[m][a] = !s[a].is_epi();
  }
  return subobject(d, keep, inclusion);
}

/// Horn: union of the faces of Delta[k] other than the j-th.
inline TruncSSet horn(int k, int j, int cap, SSetMap* inclusion = nullptr) {
  auto d = standard_simplex(k, cap);
  std::vector<std::vector<char>> keep(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    auto s = enumerate_monotone(m, k);
    keep[m].resize(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      std::vector<char> hit(k + 1, 0);
      for (int v : s[a].images()) hit[v] = 1;
      int missing = 0, which = -1;
      for (int v = 0; v <= k; ++v)
        if (!hit[v]) { ++missing; which = v; }
      keep[m][a] = missing >= 2 || (missing == 1 && which != j);
    }
  }
  return subobject(d, keep, inclusion);
}

/// Cartesian product; the m-simplex (x, y) has index x * |B_m| + y.
inline TruncSSet product(const TruncSSet& a, const TruncSSet& b) {
  if (a.cap() != b.cap()) throw std::invalid_argument("product: caps differ");
  const int cap = a.cap();
  TruncSSet x(cap);
  for (int m = 0; m <= cap; ++m) x.set_count(m, a.count(m) * b.count(m));
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = x.face_table(m, i);
      t.resize(x.count(m));
      const std::size_t nb = b.count(m), nb1 = b.count(m - 1);
      for (std::size_t s = 0; s < x.count(m); ++s)
        t[s] = static_cast<int>(a.face(m, i, static_cast<int>(s / nb)) * nb1 + b.face(m, i, static_cast<int>(s % nb)));
    }
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = x.degen_table(m, i);
      t.resize(x.count(m));
      const std::size_t nb = b.count(m), nb1 = b.count(m + 1);
      for (std::size_t s = 0; s < x.count(m); ++s)
        t[s] = static_cast<int>(a.degen(m, i, static_cast<int>(s / nb)) * nb1 + b.degen(m, i, static_cast<int>(s % nb)));
    }
  return x;
}

/// f x g : A1 x B1 -> A2 x B2.
inline SSetMap product_map(const SSetMap& f, const SSetMap& g, const TruncSSet& b1, const TruncSSet& b2) {
  SSetMap h;
  for (std::size_t m = 0; m < f.at.size(); ++m) {
    const std::size_t nb1 = b1.count(static_cast<int>(m)), nb2 = b2.count(static_cast<int>(m));
    h.at.emplace_back(f.at[m].size() * nb1);
    for (std::size_t s = 0; s < h.at[m].size(); ++s)
      h.at[m][s] = static_cast<int>(f.at[m][s / nb1] * nb2 + g.at[m][s % nb1]);
  }
  return h;
}

inline SSetMap projection_first(const TruncSSet& a, const TruncSSet& b) {
  SSetMap p;
  for (int m = 0; m <= a.cap(); ++m) {
    p.at.emplace_back(a.count(m) * b.count(m));
    for (std::size_t s = 0; s < p.at[m].size(); ++s) p.at[m][s] = static_cast<int>(s / b.count(m));
  }
  return p;
}

inline SSetMap projection_second(const TruncSSet& a, const TruncSSet& b) {
  SSetMap p;
  for (int m = 0; m <= a.cap(); ++m) {
    p.at.emplace_back(a.count(m) * b.count(m));
    for (std::size_t s = 0; s < p.at[m].size(); ++s) p.at[m][s] = static_cast<int>(s % b.count(m));
  }
  return p;
}

/// Product of a list; simplices indexed in mixed radix, first factor most significant.
inline TruncSSet product(const std::vector<TruncSSet>& factors, int cap) {
  TruncSSet x = point(cap);
  for (auto& f : factors) x = product(x, f);
  return x;
}

inline TruncSSet coproduct(const TruncSSet& a, const TruncSSet& b) {
  if (a.cap() != b.cap()) throw std::invalid_argument("coproduct: caps differ");
  const int cap = a.cap();
  TruncSSet x(cap);
  for (int m = 0; m <= cap; ++m) x.set_count(m, a.count(m) + b.count(m));
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = x.face_table(m, i);
      t = a.face_table(m, i);
      for (int y : b.face_table(m, i)) t.push_back(y + static_cast<int>(a.count(m - 1)));
    }
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = x.degen_table(m, i);
      t = a.degen_table(m, i);
      for (int y : b.degen_table(m, i)) t.push_back(y + static_cast<int>(a.count(m + 1)));
    }
  return x;
}

/// Quotient a / b collapsing the image of an injective map b -> a to a point.
inline TruncSSet collapse_subobject(const TruncSSet& a, const SSetMap& inclusion, SSetMap* quotient = nullptr) {
  const int cap = a.cap();
  std::vector<std::vector<int>> cls(cap + 1);
  SSetMap q;
  TruncSSet x(cap);
  for (int m = 0; m <= cap; ++m) {
    std::vector<char> in(a.count(m), 0);
    for (int s : inclusion.at[m]) in[s] = 1;
    const bool has_base = !inclusion.at[m].empty();
    cls[m].assign(a.count(m), -1);
    int next = has_base ? 1 : 0;
    for (std::size_t s = 0; s < a.count(m); ++s) cls[m][s] = in[s] ? 0 : next++;
    x.set_count(m, static_cast<std::size_t>(next));
    q.at.push_back(cls[m]);
  }
  std::vector<std::vector<int>> reps(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    reps[m].assign(x.count(m), -1);
    for (std::size_t s = 0; s < a.count(m); ++s)
      if (reps[m][cls[m][s]] < 0) reps[m][cls[m][s]] = static_cast<int>(s);
  }
  auto rep = [&](int m, int c) { return reps[m][c]; };
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = x.face_table(m, i);
      t.resize(x.count(m));
      for (std::size_t c = 0; c < x.count(m); ++c) t[c] = cls[m - 1][a.face(m, i, rep(m, static_cast<int>(c)))];
    }
  for (int m = 0; m < cap; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& t = x.degen_table(m, i);
      t.resize(x.count(m));
      for (std::size_t c = 0; c < x.count(m); ++c) t[c] = cls[m + 1][a.degen(m, i, rep(m, static_cast<int>(c)))];
    }
  if (quotient) *quotient = std::move(q);
  return x;
}

/// Image of an m-simplex under the classifying map Delta[m] -> K: the map theta |-> theta^*(x).
inline SSetMap classifying_map(const TruncSSet& k, int m, int x) {
  SSetMap f;
  for (int j = 0; j <= k.cap(); ++j) {
    auto s = enumerate_monotone(j, m);
    f.at.emplace_back(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) f.at[j][a] = k.act(s[a], x);
  }
  return f;
}

}  // namespace cosimplex
