#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cosimplex {

struct Arrow {
  int src;
  int tgt;
};

/// Finite category with an explicit composition table over composable pairs.
class FinCat {
 public:
  int add_object(std::string label = {}) {
    int o = static_cast<int>(labels_.size());
    labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    int id = push_arrow(o, o);
    identity_.push_back(id);
    comp_[key(id, id)] = id;
    return o;
  }

  int add_morphism(int src, int tgt) {
    check_object(src);
    check_object(tgt);
    int m = push_arrow(src, tgt);
    comp_[key(identity_[tgt], m)] = m;
    comp_[key(m, identity_[src])] = m;
    return m;
  }

  void set_composite(int g, int f, int gf) {
    if (arrows_[f].tgt != arrows_[g].src) throw std::invalid_argument("set_composite: arrows not composable");
    if (arrows_[gf].src != arrows_[f].src || arrows_[gf].tgt != arrows_[g].tgt)
      throw std::invalid_argument("set_composite: composite has wrong endpoints");
    comp_[key(g, f)] = gf;
  }

  std::optional<int> try_compose(int g, int f) const {
    auto it = comp_.find(key(g, f));
    if (it == comp_.end()) return std::nullopt;
    return it->second;
  }

  int compose(int g, int f) const {
    if (arrows_[f].tgt != arrows_[g].src) throw std::invalid_argument("compose: arrows not composable");
    auto r = try_compose(g, f);
    if (!r) throw std::logic_error("compose: composition table incomplete");
    return *r;
  }

  std::size_t num_objects() const { return labels_.size(); }
  std::size_t num_morphisms() const { return arrows_.size(); }
  const Arrow& arrow(int m) const { return arrows_[m]; }
  int identity(int o) const { return identity_[o]; }
  bool is_identity(int m) const { return identity_[arrows_[m].src] == m; }
  const std::vector<int>& out(int o) const { return out_[o]; }
  const std::vector<int>& in(int o) const { return in_[o]; }
  const std::string& label(int o) const { return labels_[o]; }
  std::size_t num_composites() const { return comp_.size(); }

  template <class F>
  void for_each_composite(F&& f) const {
    for (auto& [k, v] : comp_) f(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
  }

  /// Exhaustive check of closure, unit and associativity laws.
  void validate() const {
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      for (int g : out_[arrows_[f].tgt]) {
        auto gf = try_compose(g, static_cast<int>(f));
        if (!gf) throw std::logic_error("composition table misses a composable pair");
        for (int h : out_[arrows_[g].tgt]) {
          auto hg = try_compose(h, g);
          if (!hg) throw std::logic_error("composition table misses a composable pair");
          if (compose(h, *gf) != compose(*hg, static_cast<int>(f)))
            throw std::logic_error("composition is not associative");
        }
      }
    }
  }

  FinCat opposite() const {
    FinCat c;
    for (auto& l : labels_) c.add_object(l);
    std::vector<int> map(arrows_.size());
    for (std::size_t m = 0; m < arrows_.size(); ++m) {
      if (is_identity(static_cast<int>(m))) map[m] = c.identity(arrows_[m].src);
      else map[m] = c.add_morphism(arrows_[m].tgt, arrows_[m].src);
    }
    for (auto& [k, v] : comp_) c.comp_[key(map[k & 0xffffffffu], map[k >> 32])] = map[v];
    return c;
  }

  /// Full subcategory on the given objects; fills object and morphism embeddings.
  FinCat full_subcategory(const std::vector<int>& objects, std::vector<int>* morphism_embedding = nullptr) const {
    FinCat c;
    std::vector<int> local(labels_.size(), -1);
    for (int o : objects) local[o] = c.add_object(labels_[o]);
    std::vector<int> map(arrows_.size(), -1);
    std::vector<int> back;
    for (std::size_t m = 0; m < arrows_.size(); ++m) {
      int s = local[arrows_[m].src], t = local[arrows_[m].tgt];
      if (s < 0 || t < 0) continue;
      map[m] = is_identity(static_cast<int>(m)) ? c.identity(s) : c.add_morphism(s, t);
    }
    back.assign(c.num_morphisms(), -1);
    for (std::size_t m = 0; m < arrows_.size(); ++m)
      if (map[m] >= 0) back[map[m]] = static_cast<int>(m);
    for (auto& [k, v] : comp_) {
      int g = map[k >> 32], f = map[k & 0xffffffffu];
      if (g >= 0 && f >= 0) c.comp_[key(g, f)] = map[v];
    }
    if (morphism_embedding) *morphism_embedding = std::move(back);
    return c;
  }

  /// Preorder on n objects: rel(a, b) says there is a (unique) arrow a -> b.
  static FinCat from_preorder(int n, const std::function<bool(int, int)>& rel,
                              const std::function<std::string(int)>& label = {}) {
    FinCat c;
    for (int i = 0; i < n; ++i) c.add_object(label ? label(i) : std::to_string(i));
    std::vector<std::vector<int>> hom(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) hom[i][i] = c.identity(i);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && rel(a, b)) hom[a][b] = c.add_morphism(a, b);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (hom[a][b] < 0) continue;
        for (int d = 0; d < n; ++d) {
          if (hom[b][d] < 0) continue;
          if (hom[a][d] < 0) throw std::invalid_argument("preorder relation is not transitive");
          c.comp_[key(hom[b][d], hom[a][b])] = hom[a][d];
        }
      }
    return c;
  }

  /// pair_map, if given, receives the arrow of (f, g) at index f * |mor b| + g.
  static FinCat product(const FinCat& a, const FinCat& b, std::vector<int>* pair_map = nullptr) {
    FinCat c;
    const int nb = static_cast<int>(b.num_objects());
    for (std::size_t x = 0; x < a.num_objects(); ++x)
      for (std::size_t y = 0; y < b.num_objects(); ++y) c.add_object("(" + a.labels_[x] + "," + b.labels_[y] + ")");
    const std::size_t mb = b.num_morphisms();
    std::vector<int> map(a.num_morphisms() * mb);
    for (std::size_t f = 0; f < a.num_morphisms(); ++f)
      for (std::size_t g = 0; g < mb; ++g) {
        int s = a.arrows_[f].src * nb + b.arrows_[g].src;
        int t = a.arrows_[f].tgt * nb + b.arrows_[g].tgt;
        map[f * mb + g] = (a.is_identity(static_cast<int>(f)) && b.is_identity(static_cast<int>(g)))
                              ? c.identity(s)
                              : c.add_morphism(s, t);
      }
    for (auto& [ka, va] : a.comp_)
      for (auto& [kb, vb] : b.comp_)
        c.comp_[key(map[(ka >> 32) * mb + (kb >> 32)], map[(ka & 0xffffffffu) * mb + (kb & 0xffffffffu)])] =
            map[va * mb + vb];
    if (pair_map) *pair_map = std::move(map);
    return c;
  }

  static std::uint64_t key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(f);
  }

 private:
  int push_arrow(int s, int t) {
    int id = static_cast<int>(arrows_.size());
    arrows_.push_back({s, t});
    out_[s].push_back(id);
    in_[t].push_back(id);
    return id;
  }
  void check_object(int o) const {
    if (o < 0 || o >= static_cast<int>(labels_.size())) throw std::out_of_range("no such object");
  }

  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> out_, in_;
  std::unordered_map<std::uint64_t, int> comp_;
};

/// Builds a category whose morphisms carry labels composed by a function;
/// the composition table is filled by label lookup.
template <class Label, class Hash>
class LabeledCategoryBuilder {
 public:
  int add_object(std::string name, Label identity_label) {
    int o = cat_.add_object(std::move(name));
    labels_.push_back(identity_label);
    index_[Key{o, o, std::move(identity_label)}] = cat_.identity(o);
    return o;
  }

  int add_morphism(int src, int tgt, Label label) {
    Key k{src, tgt, label};
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    int m = cat_.add_morphism(src, tgt);
    labels_.push_back(std::move(label));
    index_[std::move(k)] = m;
    return m;
  }

  const Label& label(int m) const { return labels_[m]; }
  const FinCat& category() const { return cat_; }

  /// compose(g, f) must return the label of g . f.
  template <class Compose>
  FinCat finish(Compose&& compose) {
    for (std::size_t f = 0; f < cat_.num_morphisms(); ++f) {
      const Arrow& af = cat_.arrow(static_cast<int>(f));
      for (int g : cat_.out(af.tgt)) {
        auto it = index_.find(Key{af.src, cat_.arrow(g).tgt, compose(labels_[g], labels_[f])});
        if (it == index_.end()) throw std::logic_error("labeled category is not closed under composition");
        cat_.set_composite(g, static_cast<int>(f), it->second);
      }
    }
    return cat_;
  }

  std::vector<Label> take_labels() { return std::move(labels_); }

 private:
  struct Key {
    int src, tgt;
    Label label;
    bool operator==(const Key& o) const { return src == o.src && tgt == o.tgt && label == o.label; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return (Hash{}(k.label) * 31 + static_cast<std::size_t>(k.src)) * 1000003 + static_cast<std::size_t>(k.tgt);
    }
  };
  FinCat cat_;
  std::vector<Label> labels_;
  std::unordered_map<Key, int, KeyHash> index_;
};

}  // namespace cosimplex
