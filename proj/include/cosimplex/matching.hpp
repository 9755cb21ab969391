#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "delta.hpp"
#include "fincat.hpp"

namespace cosimplex {

/// Factors through: is b = e . a for some epi e? Both a and b are epis with the same domain.
inline bool epi_factors_through(const MonotoneMap& b, const MonotoneMap& a) {
  for (int i = 0; i < a.domain(); ++i)
    if (a(i) == a(i + 1) && b(i) != b(i + 1)) return false;
  return true;
}

/// The unique e with e . a = b (requires epi_factors_through(b, a)).
inline MonotoneMap epi_quotient(const MonotoneMap& b, const MonotoneMap& a) {
  std::vector<int> v(a.codomain() + 1);
  for (int i = 0; i <= a.domain(); ++i) v[a(i)] = b(i);
  return MonotoneMap(b.codomain(), std::move(v));
}

inline bool multi_factors_through(const MultiMap& b, const MultiMap& a) {
  for (int j = 0; j < a.arity(); ++j)
    if (!epi_factors_through(b[j], a[j])) return false;
  return true;
}

inline MultiMap multi_quotient(const MultiMap& b, const MultiMap& a) {
  MultiMap e;
  for (int j = 0; j < a.arity(); ++j) e.components.push_back(epi_quotient(b[j], a[j]));
  return e;
}

inline int total_degree(const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0); }

/// Matching category of Delta^n at a degree tuple: epi tuples out of it, not all identities.
/// Thin: a -> b exactly when b factors through a.
class MatchingCategory {
 public:
  explicit MatchingCategory(std::vector<int> at) : at_(std::move(at)) {
    std::vector<std::vector<MonotoneMap>> per;
    for (int p : at_) {
      std::vector<MonotoneMap> all;
      for (int q = p; q >= 0; --q)
        for (auto& e : enumerate_epis(p, q)) all.push_back(e);
      per.push_back(std::move(all));
    }
    std::vector<std::size_t> idx(at_.size(), 0);
    bool more = !at_.empty();
    while (more) {
      MultiMap m;
      for (std::size_t j = 0; j < at_.size(); ++j) m.components.push_back(per[j][idx[j]]);
      if (!m.is_identity()) objects_.push_back(std::move(m));
      more = false;
      for (std::size_t pos = at_.size(); pos-- > 0;) {
        if (++idx[pos] < per[pos].size()) { more = true; break; }
        idx[pos] = 0;
      }
    }
    const int n = static_cast<int>(objects_.size());
    cat_ = FinCat::from_preorder(
        n, [&](int a, int b) { return multi_factors_through(objects_[b], objects_[a]); },
        [&](int a) { return to_string(objects_[a]); });
  }

  /// Diagonal matching category at ([k], ..., [k]).
  MatchingCategory(int n, int k) : MatchingCategory(std::vector<int>(n, k)) {}

  const std::vector<int>& at() const { return at_; }
  int arity() const { return static_cast<int>(at_.size()); }
  std::size_t size() const { return objects_.size(); }
  const MultiMap& object(int i) const { return objects_[i]; }
  const std::vector<MultiMap>& objects() const { return objects_; }
  const FinCat& category() const { return cat_; }

  int find(const MultiMap& m) const {
    auto it = std::find(objects_.begin(), objects_.end(), m);
    return it == objects_.end() ? -1 : static_cast<int>(it - objects_.begin());
  }

  /// Connecting epi tuple for the arrow a -> b.
  MultiMap connecting(int a, int b) const { return multi_quotient(objects_[b], objects_[a]); }

 private:
  std::vector<int> at_;
  std::vector<MultiMap> objects_;
  FinCat cat_;
};

struct TerminalFactorization {
  MonotoneMap beta;
  MultiMap rest;
};

/// Terminal factorization m = rest . (beta, ..., beta) of an epi tuple out of ([k], ..., [k]).
inline TerminalFactorization terminal_factorization(const MultiMap& m) {
  if (m.arity() == 0) throw std::invalid_argument("terminal_factorization: empty tuple");
  const int k = m[0].domain();
  for (auto& c : m.components) {
    if (c.domain() != k) throw std::invalid_argument("terminal_factorization: components must share a domain");
    if (!c.is_epi()) throw std::invalid_argument("terminal_factorization: components must be epis");
  }
  std::vector<int> u;
  for (int i = 0; i < k; ++i) {
    bool all = true;
    for (auto& c : m.components) all = all && c(i) == c(i + 1);
    if (all) u.push_back(i);
  }
  TerminalFactorization tf{epi_from_collapse(k, u), {}};
  for (auto& c : m.components) tf.rest.components.push_back(epi_quotient(c, tf.beta));
  return tf;
}

struct FactorizationCertificate {
  bool ok = true;
  int diagonal_factorizations = 0;
  std::string failure;
};

/// Checks by exhaustive search that the terminal factorization is terminal among all
/// diagonal factorizations of m.
inline FactorizationCertificate certify_terminal_factorization(const MultiMap& m) {
  FactorizationCertificate cert;
  auto tf = terminal_factorization(m);
  const int k = m[0].domain();
  if (compose(tf.rest, diagonal_embed(tf.beta, m.arity())) != m) {
    cert.ok = false;
    cert.failure = "rest . diag(beta) != m for " + to_string(m);
    return cert;
  }
  for (int r = 0; r <= k; ++r)
    for (auto& gamma : enumerate_epis(k, r)) {
      bool factors = true;
      for (auto& c : m.components) factors = factors && epi_factors_through(c, gamma);
      if (!factors) continue;
      ++cert.diagonal_factorizations;
      int hits = 0;
      if (tf.beta.codomain() <= r)
        for (auto& delta : enumerate_epis(r, tf.beta.codomain())) {
          if (compose(delta, gamma) != tf.beta) continue;
          bool rest_ok = true;
          for (auto& c : m.components)
            rest_ok = rest_ok && compose(epi_quotient(c, tf.beta), delta) == epi_quotient(c, gamma);
          if (rest_ok) ++hits;
        }
      if (hits != 1) {
        cert.ok = false;
        cert.failure = "diagonal factorization through " + to_string(gamma) + " of " + to_string(m) +
                       " has " + std::to_string(hits) + " comparison maps";
        return cert;
      }
    }
  return cert;
}

inline void check_stage_index(int i, int lo, int hi) {
  if (i < lo || i > hi)
    throw std::out_of_range("filtration index " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
}

inline bool all_components_equal(const MultiMap& m) {
  for (int j = 1; j < m.arity(); ++j)
    if (!(m[j] == m[0])) return false;
  return true;
}

inline bool in_stage(const MultiMap& m, int i) {
  return total_degree(m.codomain()) <= i || all_components_equal(m);
}

/// Objects of the i-th filtration stage, -1 <= i <= nk-1.
inline std::vector<int> filtration_stage(const MatchingCategory& mc, int i) {
  const int nk = total_degree(mc.at());
  check_stage_index(i, -1, nk - 1);
  std::vector<int> out;
  for (std::size_t a = 0; a < mc.size(); ++a)
    if (in_stage(mc.object(static_cast<int>(a)), i)) out.push_back(static_cast<int>(a));
  return out;
}

struct NewObjectSplit {
  std::vector<int> S;  ///< new objects with a non-identity terminal diagonal factor
  std::vector<int> T;  ///< the remaining new objects
};

/// New objects of stage i+1 (relative to stage i), -1 <= i <= nk-2.
inline NewObjectSplit split_new_objects(const MatchingCategory& mc, int i) {
  const int nk = total_degree(mc.at());
  check_stage_index(i, -1, nk - 2);
  NewObjectSplit split;
  for (std::size_t a = 0; a < mc.size(); ++a) {
    const auto& m = mc.object(static_cast<int>(a));
    if (in_stage(m, i) || !in_stage(m, i + 1)) continue;
    if (terminal_factorization(m).beta.is_identity()) split.T.push_back(static_cast<int>(a));
    else split.S.push_back(static_cast<int>(a));
  }
  return split;
}

/// Stage i together with the S-part of the new objects at i+1.
inline std::vector<int> prime_stage(const MatchingCategory& mc, int i) {
  auto stage = filtration_stage(mc, i);
  auto split = split_new_objects(mc, i);
  stage.insert(stage.end(), split.S.begin(), split.S.end());
  std::sort(stage.begin(), stage.end());
  return stage;
}

}  // namespace cosimplex
