#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosimplex {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order-preserving map [m] -> [n], stored as its image sequence.
class MonotoneMap {
 public:
  MonotoneMap() = default;

  MonotoneMap(int codomain, std::vector<int> images) : cod_(codomain), img_(std::move(images)) {
    if (img_.empty()) throw std::invalid_argument("monotone map needs a nonempty domain");
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] < 0 || img_[i] > cod_)
        throw std::invalid_argument("monotone map image out of range");
      if (i > 0 && img_[i] < img_[i - 1])
        throw std::invalid_argument("monotone map images must be nondecreasing");
    }
  }

  static MonotoneMap identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return MonotoneMap(n, std::move(v));
  }

  /// delta^i : [n-1] -> [n], skipping i.
  static MonotoneMap coface(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface index out of range");
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j < i ? j : j + 1;
    return MonotoneMap(n, std::move(v));
  }

  /// sigma^j : [n+1] -> [n], hitting j twice.
  static MonotoneMap codegeneracy(int n, int j) {
    if (n < 0 || j < 0 || j > n) throw std::invalid_argument("codegeneracy index out of range");
    std::vector<int> v(n + 2);
    for (int t = 0; t <= n + 1; ++t) v[t] = t <= j ? t : t - 1;
    return MonotoneMap(n, std::move(v));
  }

  static MonotoneMap constant(int m, int n, int value) {
    return MonotoneMap(n, std::vector<int>(m + 1, value));
  }

  int domain() const { return static_cast<int>(img_.size()) - 1; }
  int codomain() const { return cod_; }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_epi() const {
    if (img_.front() != 0 || img_.back() != cod_) return false;
    for (std::size_t i = 1; i < img_.size(); ++i)
      if (img_[i] - img_[i - 1] > 1) return false;
    return true;
  }

  bool is_mono() const {
    for (std::size_t i = 1; i < img_.size(); ++i)
      if (img_[i] == img_[i - 1]) return false;
    return true;
  }

  bool is_identity() const { return domain() == cod_ && is_mono(); }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int cod_ = 0;
  std::vector<int> img_{0};
};

/// g . f
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.codomain() != g.domain())
    throw CompositionError("cannot compose: codomain [" + std::to_string(f.codomain()) +
                           "] differs from domain [" + std::to_string(g.domain()) + "]");
  std::vector<int> v(f.domain() + 1);
  for (int i = 0; i <= f.domain(); ++i) v[i] = g(f(i));
  return MonotoneMap(g.codomain(), std::move(v));
}

struct EpiMono {
  MonotoneMap epi;
  MonotoneMap mono;
};

inline EpiMono epi_mono_factor(const MonotoneMap& f) {
  std::vector<int> values;
  std::vector<int> e(f.domain() + 1);
  for (int i = 0; i <= f.domain(); ++i) {
    if (values.empty() || values.back() != f(i)) values.push_back(f(i));
    e[i] = static_cast<int>(values.size()) - 1;
  }
  int q = static_cast<int>(values.size()) - 1;
  return {MonotoneMap(q, std::move(e)), MonotoneMap(f.codomain(), std::move(values))};
}

/// Indices u with epi(u) == epi(u+1).
inline std::vector<int> collapse_set(const MonotoneMap& epi) {
  std::vector<int> u;
  for (int i = 0; i < epi.domain(); ++i)
    if (epi(i) == epi(i + 1)) u.push_back(i);
  return u;
}

/// The unique epi out of [k] collapsing exactly the adjacencies in u.
inline MonotoneMap epi_from_collapse(int k, const std::vector<int>& u) {
  std::vector<char> mark(k > 0 ? k : 0, 0);
  for (int i : u) {
    if (i < 0 || i >= k) throw std::invalid_argument("collapse index out of range");
    mark[i] = 1;
  }
  std::vector<int> v(k + 1);
  v[0] = 0;
  for (int i = 0; i < k; ++i) v[i + 1] = v[i] + (mark[i] ? 0 : 1);
  const int top = v.back();
  return MonotoneMap(top, std::move(v));
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

/// Number of monotone maps [m] -> [n].
inline std::uint64_t count_monotone(int m, int n) {
  if (m < 0 || n < 0) return 0;
  return binomial(m + n + 1, m + 1);
}

/// All monotone maps [m] -> [n] in lexicographic order of image sequences.
inline std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
  std::vector<MonotoneMap> out;
  if (m < 0 || n < 0) return out;
  out.reserve(count_monotone(m, n));
  std::vector<int> v(m + 1, 0);
  while (true) {
    out.emplace_back(n, v);
    int pos = m;
    while (pos >= 0 && v[pos] == n) --pos;
    if (pos < 0) break;
    ++v[pos];
    for (int j = pos + 1; j <= m; ++j) v[j] = v[pos];
  }
  return out;
}

/// Position of f in enumerate_monotone(f.domain(), f.codomain()).
inline std::size_t monotone_rank(const MonotoneMap& f) {
  const int m = f.domain();
  const int n = f.codomain();
  std::size_t rank = 0;
  int lo = 0;
  for (int pos = 0; pos <= m; ++pos) {
    const int rest = m - pos;
    for (int v = lo; v < f(pos); ++v) rank += binomial(n - v + rest, rest);
    lo = f(pos);
  }
  return rank;
}

/// All epis [k] -> [p], one per (k-p)-subset of collapsed adjacencies.
inline std::vector<MonotoneMap> enumerate_epis(int k, int p) {
  std::vector<MonotoneMap> out;
  if (p > k || p < 0 || k < 0) return out;
  const int r = k - p;
  std::vector<int> u(r);
  for (int i = 0; i < r; ++i) u[i] = i;
  while (true) {
    out.push_back(epi_from_collapse(k, u));
    int pos = r - 1;
    while (pos >= 0 && u[pos] == k - r + pos) --pos;
    if (pos < 0) break;
    ++u[pos];
    for (int j = pos + 1; j < r; ++j) u[j] = u[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Monomorphisms [q] -> [n].
inline std::vector<MonotoneMap> enumerate_monos(int q, int n) {
  std::vector<MonotoneMap> out;
  for (auto& f : enumerate_monotone(q, n))
    if (f.is_mono()) out.push_back(f);
  return out;
}

/// Morphism of Delta^n: one monotone map per coordinate.
struct MultiMap {
  std::vector<MonotoneMap> components;

  MultiMap() = default;
  explicit MultiMap(std::vector<MonotoneMap> c) : components(std::move(c)) {}

  int arity() const { return static_cast<int>(components.size()); }
  const MonotoneMap& operator[](int j) const { return components[j]; }

  std::vector<int> domain() const {
    std::vector<int> d;
    for (auto& c : components) d.push_back(c.domain());
    return d;
  }
  std::vector<int> codomain() const {
    std::vector<int> d;
    for (auto& c : components) d.push_back(c.codomain());
    return d;
  }
  bool is_epi() const {
    return std::all_of(components.begin(), components.end(), [](auto& c) { return c.is_epi(); });
  }
  bool is_mono() const {
    return std::all_of(components.begin(), components.end(), [](auto& c) { return c.is_mono(); });
  }
  bool is_identity() const {
    return std::all_of(components.begin(), components.end(), [](auto& c) { return c.is_identity(); });
  }

  static MultiMap identity(const std::vector<int>& degrees) {
    MultiMap m;
    for (int d : degrees) m.components.push_back(MonotoneMap::identity(d));
    return m;
  }

  friend bool operator==(const MultiMap&, const MultiMap&) = default;
  friend auto operator<=>(const MultiMap&, const MultiMap&) = default;
};

inline MultiMap compose(const MultiMap& g, const MultiMap& f) {
  if (g.arity() != f.arity()) throw CompositionError("cannot compose multi-maps of different arity");
  MultiMap out;
  for (int j = 0; j < g.arity(); ++j) out.components.push_back(compose(g[j], f[j]));
  return out;
}

/// phi |-> (phi, ..., phi).
inline MultiMap diagonal_embed(const MonotoneMap& phi, int n) {
  return MultiMap(std::vector<MonotoneMap>(n, phi));
}

struct MonotoneMapHash {
  std::size_t operator()(const MonotoneMap& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.codomain()) * 0x9e3779b97f4a7c15ULL;
    for (int v : f.images()) h = (h ^ static_cast<std::size_t>(v + 1)) * 0x100000001b3ULL;
    return h;
  }
};

struct MultiMapHash {
  std::size_t operator()(const MultiMap& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto& c : m.components) h = (h ^ MonotoneMapHash{}(c)) * 0x100000001b3ULL;
    return h;
  }
};

inline std::string to_string(const MonotoneMap& f) {
  std::string s = "(";
  for (int i = 0; i <= f.domain(); ++i) s += (i ? "," : "") + std::to_string(f(i));
  return s + ")";
}

inline std::string to_string(const MultiMap& m) {
  std::string s = "[";
  for (int j = 0; j < m.arity(); ++j) s += (j ? "," : "") + to_string(m[j]);
  return s + "]";
}

inline std::string degrees_string(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace cosimplex
