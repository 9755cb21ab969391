#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sset.hpp"

namespace cosimplex {

/// Finite many-sorted set with unary operations. Homomorphisms between two such
/// structures over the same signature are sort-wise functions commuting with every
/// operation. Truncated simplicial sets, diagrams of them and natural transformations
/// all reduce to this.
struct Algebra {
  std::vector<std::size_t> sizes;  ///< per sort
  std::vector<int> op_source;      ///< per operation
  std::vector<int> op_target;
  std::vector<std::span<const int>> tables;

  int add_sort(std::size_t n) {
    sizes.push_back(n);
    return static_cast<int>(sizes.size()) - 1;
  }
  void add_op(int src, int tgt, std::span<const int> table) {
    op_source.push_back(src);
    op_target.push_back(tgt);
    tables.push_back(table);
  }
  std::size_t num_ops() const { return tables.size(); }
};

/// Faces and degeneracies of a truncated simplicial set as operations on sorts base..base+cap.
inline void append_sset(Algebra& alg, const TruncSSet& x) {
  const int base = static_cast<int>(alg.sizes.size());
  for (int m = 0; m <= x.cap(); ++m) alg.add_sort(x.count(m));
  for (int m = 1; m <= x.cap(); ++m)
    for (int i = 0; i <= m; ++i) alg.add_op(base + m, base + m - 1, x.face_table(m, i));
  for (int m = 0; m < x.cap(); ++m)
    for (int i = 0; i <= m; ++i) alg.add_op(base + m, base + m + 1, x.degen_table(m, i));
}

inline Algebra sset_algebra(const TruncSSet& x) {
  Algebra a;
  append_sset(a, x);
  return a;
}

/// Backtracking enumeration of all homomorphisms source -> target. Generators are taken
/// from the strongly connected components of the source's operation graph in topological
/// order; every choice is propagated along all operations and checked for consistency.
class HomSearch {
 public:
  HomSearch(const Algebra& source, const Algebra& target) : src_(source), tgt_(target) {
    if (source.sizes.size() != target.sizes.size() || source.num_ops() != target.num_ops())
      throw std::invalid_argument("hom search: signatures differ");
    for (std::size_t o = 0; o < source.num_ops(); ++o)
      if (source.op_source[o] != target.op_source[o] || source.op_target[o] != target.op_target[o])
        throw std::invalid_argument("hom search: operation sorts differ");
    offset_.assign(source.sizes.size() + 1, 0);
    for (std::size_t s = 0; s < source.sizes.size(); ++s) offset_[s + 1] = offset_[s] + source.sizes[s];
    const std::size_t n = offset_.back();
    sort_of_.resize(n);
    for (std::size_t s = 0; s < source.sizes.size(); ++s)
      for (std::size_t x = offset_[s]; x < offset_[s + 1]; ++x) sort_of_[x] = static_cast<int>(s);
    std::vector<std::size_t> deg(n + 1, 0);
    for (std::size_t o = 0; o < source.num_ops(); ++o) {
      const int s = source.op_source[o];
      if (source.tables[o].size() != source.sizes[s] || target.tables[o].size() != target.sizes[s])
        throw std::invalid_argument("hom search: operation table has the wrong length");
      for (std::size_t x = 0; x < source.sizes[s]; ++x) ++deg[offset_[s] + x + 1];
    }
    for (std::size_t e = 0; e < n; ++e) deg[e + 1] += deg[e];
    edge_start_ = deg;
    edges_.resize(deg[n]);
    std::vector<std::size_t> fill(deg.begin(), deg.end() - 1);
    for (std::size_t o = 0; o < source.num_ops(); ++o) {
      const int s = source.op_source[o], t = source.op_target[o];
      for (std::size_t x = 0; x < source.sizes[s]; ++x)
        edges_[fill[offset_[s] + x]++] = {static_cast<int>(o), static_cast<int>(offset_[t] + source.tables[o][x])};
    }
    order_generators();
    value_.assign(n, -1);
  }

  std::size_t element(int sort, int x) const { return offset_[sort] + static_cast<std::size_t>(x); }
  std::size_t num_elements() const { return offset_.back(); }
  const std::vector<std::size_t>& offsets() const { return offset_; }

  /// Pins an element to a value before the search; false on immediate conflict.
  bool fix(int sort, int x, int value) {
    if (value < 0 || static_cast<std::size_t>(value) >= tgt_.sizes[sort]) return false;
    return assign(element(sort, x), value);
  }

  /// visit(values) receives the flat assignment (index by element()); return false to stop.
  void for_each(const std::function<bool(const std::vector<int>&)>& visit) {
    stop_ = false;
    dfs(0, visit);
  }

  std::vector<std::vector<int>> all() {
    std::vector<std::vector<int>> out;
    for_each([&](const std::vector<int>& v) {
      out.push_back(v);
      return true;
    });
    return out;
  }

  std::size_t count() {
    std::size_t c = 0;
    for_each([&](const std::vector<int>&) {
      ++c;
      return true;
    });
    return c;
  }

 private:
  struct Edge {
    int op;
    int to;
  };

  void order_generators() {
    const std::size_t n = offset_.back();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    int counter = 0;
    struct Frame {
      std::size_t v;
      std::size_t next;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] >= 0) continue;
      call.push_back({root, edge_start_[root]});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on[root] = 1;
      while (!call.empty()) {
        Frame& f = call.back();
        if (f.next < edge_start_[f.v + 1]) {
          std::size_t w = static_cast<std::size_t>(edges_[f.next++].to);
          if (index[w] < 0) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on[w] = 1;
            call.push_back({w, edge_start_[w]});
          } else if (on[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
        } else {
          std::size_t v = f.v;
          call.pop_back();
          if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
          if (low[v] == index[v]) {
            std::vector<std::size_t> scc;
            std::size_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on[w] = 0;
              scc.push_back(w);
            } while (w != v);
            sccs.push_back(std::move(scc));
          }
        }
      }
    }
    // Tarjan emits sinks first; generators come from the sources.
    for (auto it = sccs.rbegin(); it != sccs.rend(); ++it)
      order_.push_back(*std::min_element(it->begin(), it->end()));
  }

  bool assign(std::size_t e, int v) {
    if (value_[e] >= 0) return value_[e] == v;
    value_[e] = v;
    trail_.push_back(e);
    work_.clear();
    work_.push_back(e);
    while (!work_.empty()) {
      std::size_t x = work_.back();
      work_.pop_back();
      const int vx = value_[x];
      for (std::size_t k = edge_start_[x]; k < edge_start_[x + 1]; ++k) {
        const Edge& ed = edges_[k];
        const int w = tgt_.tables[ed.op][vx];
        int& cur = value_[ed.to];
        if (cur < 0) {
          cur = w;
          trail_.push_back(static_cast<std::size_t>(ed.to));
          work_.push_back(static_cast<std::size_t>(ed.to));
        } else if (cur != w) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void dfs(std::size_t pos, const std::function<bool(const std::vector<int>&)>& visit) {
    while (pos < order_.size() && value_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      if (!visit(value_)) stop_ = true;
      return;
    }
    const std::size_t e = order_[pos];
    const int s = sort_of_[e];
    const std::size_t mark = trail_.size();
    for (std::size_t v = 0; v < tgt_.sizes[s] && !stop_; ++v) {
      bool ok = true;
      for (std::size_t k = edge_start_[e]; k < edge_start_[e + 1] && ok; ++k) {
        const Edge& ed = edges_[k];
        const int cur = value_[ed.to];
        if (cur >= 0 && cur != tgt_.tables[ed.op][v]) ok = false;
      }
      if (ok && assign(e, static_cast<int>(v))) dfs(pos + 1, visit);
      undo(mark);
    }
  }

  const Algebra& src_;
  const Algebra& tgt_;
  std::vector<std::size_t> offset_;
  std::vector<int> sort_of_;
  std::vector<std::size_t> edge_start_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> order_;
  std::vector<int> value_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> work_;
  bool stop_ = false;
};

/// Splits a flat assignment over the sorts of a simplicial set into an SSetMap.
inline SSetMap unflatten_map(const std::vector<int>& flat, const std::vector<std::size_t>& offsets, int base, int cap) {
  SSetMap f;
  for (int m = 0; m <= cap; ++m)
    f.at.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(offsets[base + m]),
                      flat.begin() + static_cast<std::ptrdiff_t>(offsets[base + m + 1]));
  return f;
}

/// All simplicial maps a -> b.
inline std::vector<SSetMap> enumerate_maps(const TruncSSet& a, const TruncSSet& b) {
  auto sa = sset_algebra(a), sb = sset_algebra(b);
  HomSearch search(sa, sb);
  std::vector<SSetMap> out;
  search.for_each([&](const std::vector<int>& v) {
    out.push_back(unflatten_map(v, search.offsets(), 0, a.cap()));
    return true;
  });
  return out;
}

inline std::size_t count_maps(const TruncSSet& a, const TruncSSet& b) {
  auto sa = sset_algebra(a), sb = sset_algebra(b);
  return HomSearch(sa, sb).count();
}

}  // namespace cosimplex
