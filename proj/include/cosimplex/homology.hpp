#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sset.hpp"
#include "union_find.hpp"

namespace cosimplex {

struct Components {
  int count = 0;
  std::vector<int> of_vertex;  ///< component id per vertex
  bool cap_limited = false;    ///< cap 0: no edges available to connect vertices
};

inline Components path_components(const TruncSSet& x) {
  Components c;
  UnionFind uf(x.count(0));
  if (x.cap() >= 1)
    for (std::size_t e = 0; e < x.count(1); ++e)
      uf.unite(static_cast<std::size_t>(x.face(1, 0, static_cast<int>(e))),
               static_cast<std::size_t>(x.face(1, 1, static_cast<int>(e))));
  c.of_vertex = uf.classes(&c.count);
  c.cap_limited = x.cap() == 0;
  return c;
}

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

template <class Int>
Int mul(const Int& a, const Int& b) {
  if constexpr (std::is_same_v<Int, std::int64_t>) return checked_mul(a, b);
  else return a * b;
}
template <class Int>
Int sub(const Int& a, const Int& b) {
  if constexpr (std::is_same_v<Int, std::int64_t>) return checked_sub(a, b);
  else return a - b;
}
template <class Int>
Int gcd_abs(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <class Int>
using Column = std::vector<std::pair<int, Int>>;  // sorted by row

/// Rank over Q of a sparse integer matrix by fraction-free column reduction.
template <class Int>
std::size_t rank_columns(std::vector<Column<Int>> cols) {
  std::vector<int> pivot_of_row;
  int max_row = -1;
  for (auto& c : cols)
    if (!c.empty()) max_row = std::max(max_row, c.back().first);
  pivot_of_row.assign(static_cast<std::size_t>(max_row + 1), -1);
  std::size_t rank = 0;
  Column<Int> scratch;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      const int low = c.back().first;
      const int p = pivot_of_row[low];
      if (p < 0) break;
      const auto& pc = cols[p];
      const Int a = pc.back().second;  // pivot entry
      const Int b = c.back().second;
      // c <- a * c - b * pc, which clears the low entry.
      scratch.clear();
      std::size_t x = 0, y = 0;
      while (x < c.size() || y < pc.size()) {
        if (y == pc.size() || (x < c.size() && c[x].first < pc[y].first)) {
          scratch.emplace_back(c[x].first, mul<Int>(a, c[x].second));
          ++x;
        } else if (x == c.size() || pc[y].first < c[x].first) {
          scratch.emplace_back(pc[y].first, sub<Int>(Int(0), mul<Int>(b, pc[y].second)));
          ++y;
        } else {
          Int v = sub<Int>(mul<Int>(a, c[x].second), mul<Int>(b, pc[y].second));
          if (v != 0) scratch.emplace_back(c[x].first, v);
          ++x;
          ++y;
        }
      }
      Int g = 0;
      for (auto& e : scratch) g = gcd_abs<Int>(g, e.second);
      if (g > 1)
        for (auto& e : scratch) e.second /= g;
      c.swap(scratch);
    }
    if (!c.empty()) {
      pivot_of_row[c.back().first] = static_cast<int>(j);
      ++rank;
    }
  }
  return rank;
}

}  // namespace detail

/// Normalized chain complex over the nondegenerate simplices.
struct ChainComplex {
  std::vector<std::vector<int>> nondegenerate;  ///< simplex ids per dimension
  /// boundary[m][c]: signed entries of the boundary of the c-th nondegenerate m-simplex
  std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary;
};

inline ChainComplex normalized_chains(const TruncSSet& x) {
  ChainComplex cc;
  std::vector<std::vector<int>> pos(x.cap() + 1);
  for (int m = 0; m <= x.cap(); ++m) {
    auto mask = x.degenerate_mask(m);
    pos[m].assign(x.count(m), -1);
    cc.nondegenerate.emplace_back();
    for (std::size_t s = 0; s < x.count(m); ++s)
      if (!mask[s]) {
        pos[m][s] = static_cast<int>(cc.nondegenerate[m].size());
        cc.nondegenerate[m].push_back(static_cast<int>(s));
      }
  }
  cc.boundary.resize(x.cap() + 1);
  for (int m = 1; m <= x.cap(); ++m)
    for (int s : cc.nondegenerate[m]) {
      std::vector<std::pair<int, int>> col;
      for (int i = 0; i <= m; ++i) {
        int r = pos[m - 1][x.face(m, i, s)];
        if (r < 0) continue;
        col.emplace_back(r, (i % 2 == 0) ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      std::vector<std::pair<int, int>> merged;
      for (auto& e : col) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
      }
      std::erase_if(merged, [](auto& e) { return e.second == 0; });
      cc.boundary[m].push_back(std::move(merged));
    }
  return cc;
}

/// Rank over Q of the boundary map out of dimension m.
inline std::size_t boundary_rank(const ChainComplex& cc, int m) {
  try {
    std::vector<detail::Column<std::int64_t>> cols;
    for (auto& c : cc.boundary[m]) {
      cols.emplace_back();
      for (auto& [r, v] : c) cols.back().emplace_back(r, v);
    }
    return detail::rank_columns<std::int64_t>(std::move(cols));
  } catch (const detail::Overflow&) {
    using big = boost::multiprecision::cpp_int;
    std::vector<detail::Column<big>> cols;
    for (auto& c : cc.boundary[m]) {
      cols.emplace_back();
      for (auto& [r, v] : c) cols.back().emplace_back(r, big(v));
    }
    return detail::rank_columns<big>(std::move(cols));
  }
}

struct BettiProfile {
  /// Reduced rational Betti numbers in dimensions 0..cap-1.
  std::vector<long> reduced;
  /// Rank of the cycles in the top dimension; no boundaries from above are available.
  long top_cycles = 0;
  int cap = 0;
  bool empty = false;

  bool acyclic() const {
    return !empty && std::all_of(reduced.begin(), reduced.end(), [](long b) { return b == 0; });
  }
};

inline BettiProfile betti(const TruncSSet& x) {
  BettiProfile bp;
  bp.cap = x.cap();
  bp.empty = x.count(0) == 0;
  auto cc = normalized_chains(x);
  std::vector<std::size_t> rank(x.cap() + 2, 0);
  for (int m = 1; m <= x.cap(); ++m) rank[m] = boundary_rank(cc, m);
  for (int m = 0; m < x.cap(); ++m) {
    long b = static_cast<long>(cc.nondegenerate[m].size()) - static_cast<long>(rank[m]) - static_cast<long>(rank[m + 1]);
    if (m == 0 && !bp.empty) b -= 1;
    bp.reduced.push_back(b);
  }
  bp.top_cycles = static_cast<long>(cc.nondegenerate[x.cap()].size()) - static_cast<long>(rank[x.cap()]);
  return bp;
}

}  // namespace cosimplex
