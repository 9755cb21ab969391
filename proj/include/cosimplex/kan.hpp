#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hashing.hpp"
#include "sset.hpp"

namespace cosimplex {

/// A horn in the source with no filler over the given base simplex.
struct HornWitness {
  int dim = 0;
  int missing = 0;
  std::vector<int> faces;  ///< source (dim-1)-simplices, entry `missing` is -1
  int base = -1;           ///< target dim-simplex

  std::string describe() const {
    std::string s = "horn L^" + std::to_string(dim) + "_" + std::to_string(missing) + " faces [";
    for (std::size_t j = 0; j < faces.size(); ++j) s += (j ? "," : "") + (faces[j] < 0 ? std::string("-") : std::to_string(faces[j]));
    return s + "] over base simplex " + std::to_string(base) + " has no filler";
  }
};

struct KanVerdict {
  bool passed = true;
  int checked_up_to = 0;  ///< verdict only covers horns of dimension <= this
  std::size_t horns_checked = 0;
  std::optional<HornWitness> failure;
};

/// Exhaustive horn filling for f : e -> b in dimensions 1..check_dim.
inline KanVerdict kan_fibration_check(const TruncSSet& e, const TruncSSet& b, const SSetMap& f, int check_dim) {
  if (check_dim > e.cap()) throw std::invalid_argument("kan check: check_dim exceeds the cap");
  KanVerdict v;
  v.checked_up_to = check_dim;
  for (int n = 1; n <= check_dim; ++n) {
    // faces of (n-1)-simplices bucketed by (face index, value)
    std::vector<std::vector<std::vector<int>>> bucket;
    if (n >= 2) {
      bucket.resize(n);
      for (int i = 0; i < n; ++i) {
        bucket[i].resize(e.count(n - 2));
        for (std::size_t x = 0; x < e.count(n - 1); ++x) bucket[i][e.face(n - 1, i, static_cast<int>(x))].push_back(static_cast<int>(x));
      }
    }
    for (int k = 0; k <= n; ++k) {
      // base simplices and fillers keyed by their faces other than k
      std::unordered_map<std::vector<int>, std::vector<int>, VectorHash> bases;
      std::unordered_map<std::vector<int>, char, VectorHash> fillable;  // key: faces then base
      std::vector<int> key;
      for (std::size_t y = 0; y < b.count(n); ++y) {
        key.clear();
        for (int j = 0; j <= n; ++j)
          if (j != k) key.push_back(b.face(n, j, static_cast<int>(y)));
        bases[key].push_back(static_cast<int>(y));
      }
      for (std::size_t x = 0; x < e.count(n); ++x) {
        key.clear();
        for (int j = 0; j <= n; ++j)
          if (j != k) key.push_back(e.face(n, j, static_cast<int>(x)));
        key.push_back(f.at[n][x]);
        fillable.emplace(key, 1);
      }
      std::vector<int> horn(n + 1, -1);
      std::vector<int> order;
      for (int j = 0; j <= n; ++j)
        if (j != k) order.push_back(j);
      bool stop = false;
      auto check_horn = [&]() {
        ++v.horns_checked;
        key.clear();
        for (int j : order) key.push_back(f.at[n - 1][horn[j]]);
        auto it = bases.find(key);
        if (it == bases.end()) return;
        std::vector<int> fk;
        for (int j : order) fk.push_back(horn[j]);
        for (int y : it->second) {
          fk.push_back(y);
          if (!fillable.count(fk)) {
            v.passed = false;
            v.failure = HornWitness{n, k, horn, y};
            stop = true;
            return;
          }
          fk.pop_back();
        }
      };
      // horn compatibility: d_i x_j = d_{j-1} x_i for i < j, both present
      auto extend = [&](auto&& self, std::size_t pos) -> void {
        if (stop) return;
        if (pos == order.size()) {
          check_horn();
          return;
        }
        const int j = order[pos];
        auto accept = [&](int x) {
          for (std::size_t q = 0; q < pos; ++q) {
            int i = order[q];
            if (e.face(n - 1, i, x) != e.face(n - 1, j - 1, horn[i])) return false;
          }
          return true;
        };
        if (pos == 0 || n < 2) {
          for (std::size_t x = 0; x < e.count(n - 1) && !stop; ++x) {
            horn[j] = static_cast<int>(x);
            self(self, pos + 1);
          }
        } else {
          const int i0 = order[0];
          for (int x : bucket[i0][e.face(n - 1, j - 1, horn[i0])]) {
            if (stop) break;
            if (!accept(x)) continue;
            horn[j] = x;
            self(self, pos + 1);
          }
        }
        horn[j] = -1;
      };
      extend(extend, 0);
      if (stop) return v;
    }
  }
  return v;
}

/// Kan complex check: the map to the point.
inline KanVerdict kan_complex_check(const TruncSSet& x, int check_dim) {
  auto pt = point(x.cap());
  SSetMap f;
  for (int m = 0; m <= x.cap(); ++m) f.at.emplace_back(x.count(m), 0);
  return kan_fibration_check(x, pt, f, check_dim);
}

}  // namespace cosimplex
