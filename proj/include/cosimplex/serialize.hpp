#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"
#include "cosimplicial.hpp"
#include "fincat.hpp"
#include "sset.hpp"

namespace cosimplex {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "cosimplex/1";

/// Malformed input; the message starts with the JSON path of the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what) : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path, std::string("missing key \"") + key + "\"");
  return *it;
}

inline int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

inline const json& as_array(const json& j, const std::string& path, std::size_t size = static_cast<std::size_t>(-1)) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (size != static_cast<std::size_t>(-1) && j.size() != size)
    throw SchemaError(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

inline std::vector<int> int_array(const json& j, const std::string& path) {
  as_array(j, path);
  std::vector<int> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return v;
}

inline std::string tuple_key(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace detail

// ---- MonotoneMap / MultiMap ----

inline json to_json(const MonotoneMap& f) { return {{"codomain", f.codomain()}, {"images", f.images()}}; }

inline MonotoneMap monotone_from_json(const json& j, const std::string& path = "") {
  int cod = detail::as_int(detail::member(j, path, "codomain"), path + "/codomain");
  auto img = detail::int_array(detail::member(j, path, "images"), path + "/images");
  try {
    return MonotoneMap(cod, img);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

inline json to_json(const MultiMap& m) {
  json a = json::array();
  for (auto& c : m.components) a.push_back(to_json(c));
  return a;
}

inline MultiMap multimap_from_json(const json& j, const std::string& path = "") {
  detail::as_array(j, path);
  if (j.empty()) throw SchemaError(path, "a multimap needs at least one component");
  MultiMap m;
  for (std::size_t i = 0; i < j.size(); ++i) m.components.push_back(monotone_from_json(j[i], path + "/" + std::to_string(i)));
  return m;
}

// ---- TruncSSet / SSetMap ----

inline json to_json(const TruncSSet& x) {
  json simplices = json::array(), faces = json::array(), degens = json::array();
  for (int m = 0; m <= x.cap(); ++m) {
    json ids = json::array();
    for (std::size_t s = 0; s < x.count(m); ++s) ids.push_back(s);
    simplices.push_back(std::move(ids));
    json f = json::array(), d = json::array();
    if (m > 0)
      for (int i = 0; i <= m; ++i) f.push_back(x.face_table(m, i));
    if (m < x.cap())
      for (int i = 0; i <= m; ++i) d.push_back(x.degen_table(m, i));
    faces.push_back(std::move(f));
    degens.push_back(std::move(d));
  }
  return {{"dim_cap", x.cap()}, {"simplices", simplices}, {"faces", faces}, {"degeneracies", degens}};
}

/// Parses and validates; a violated simplicial identity raises SimplicialIdentityError naming it.
inline TruncSSet sset_from_json(const json& j, const std::string& path = "") {
  const int cap = detail::as_int(detail::member(j, path, "dim_cap"), path + "/dim_cap");
  if (cap < 0) throw SchemaError(path + "/dim_cap", "dimension cap must be nonnegative");
  const auto n = static_cast<std::size_t>(cap) + 1;
  const auto& simp = detail::as_array(detail::member(j, path, "simplices"), path + "/simplices", n);
  const auto& faces = detail::as_array(detail::member(j, path, "faces"), path + "/faces", n);
  const auto& degens = detail::as_array(detail::member(j, path, "degeneracies"), path + "/degeneracies", n);
  TruncSSet x(cap);
  for (int m = 0; m <= cap; ++m) {
    const auto p = path + "/simplices/" + std::to_string(m);
    auto ids = detail::int_array(simp[m], p);
    for (std::size_t s = 0; s < ids.size(); ++s)
      if (ids[s] != static_cast<int>(s)) throw SchemaError(p + "/" + std::to_string(s), "simplex ids must be 0, 1, 2, ...");
    x.set_count(m, ids.size());
  }
  for (int m = 0; m <= cap; ++m) {
    const auto pf = path + "/faces/" + std::to_string(m);
    detail::as_array(faces[m], pf, m == 0 ? 0 : static_cast<std::size_t>(m) + 1);
    for (int i = 0; m > 0 && i <= m; ++i) x.face_table(m, i) = detail::int_array(faces[m][i], pf + "/" + std::to_string(i));
    const auto pd = path + "/degeneracies/" + std::to_string(m);
    detail::as_array(degens[m], pd, m == cap ? 0 : static_cast<std::size_t>(m) + 1);
    for (int i = 0; m < cap && i <= m; ++i) x.degen_table(m, i) = detail::int_array(degens[m][i], pd + "/" + std::to_string(i));
  }
  x.validate();
  return x;
}

inline json to_json(const SSetMap& f) { return f.at; }

inline SSetMap sset_map_from_json(const json& j, const std::string& path = "") {
  detail::as_array(j, path);
  SSetMap f;
  for (std::size_t m = 0; m < j.size(); ++m) f.at.push_back(detail::int_array(j[m], path + "/" + std::to_string(m)));
  return f;
}

/// Map document {"source", "target", "map"}; checks the map is simplicial.
struct SSetMapDocument {
  TruncSSet source, target;
  SSetMap map;
};

inline json to_json(const SSetMapDocument& d) {
  return {{"source", to_json(d.source)}, {"target", to_json(d.target)}, {"map", to_json(d.map)}};
}

inline SSetMapDocument sset_map_document_from_json(const json& j, const std::string& path = "") {
  SSetMapDocument d{sset_from_json(detail::member(j, path, "source"), path + "/source"),
                    sset_from_json(detail::member(j, path, "target"), path + "/target"),
                    sset_map_from_json(detail::member(j, path, "map"), path + "/map")};
  if (static_cast<int>(d.map.at.size()) != d.source.cap() + 1) throw SchemaError(path + "/map", "one table per dimension expected");
  for (int m = 0; m <= d.source.cap(); ++m)
    if (d.map.at[m].size() != d.source.count(m)) throw SchemaError(path + "/map/" + std::to_string(m), "table length differs from the simplex count");
  auto defect = simplicial_map_defect(d.source, d.target, d.map);
  if (!defect.empty()) throw SimplicialIdentityError(defect);
  return d;
}

// ---- FinCat ----

inline json to_json(const FinCat& c) {
  json objects = json::array(), identities = json::array(), morphisms = json::array(), compose = json::array();
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    objects.push_back(c.label(static_cast<int>(o)));
    identities.push_back(c.identity(static_cast<int>(o)));
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const auto& a = c.arrow(static_cast<int>(m));
    morphisms.push_back({{"id", m}, {"src", a.src}, {"tgt", a.tgt}});
  }
  std::vector<std::array<int, 3>> triples;
  c.for_each_composite([&](int g, int f, int gf) { triples.push_back({g, f, gf}); });
  std::sort(triples.begin(), triples.end());
  for (auto& t : triples) compose.push_back(t);
  return {{"objects", objects}, {"identities", identities}, {"morphisms", morphisms}, {"compose", compose}};
}

/// Rebuilds the category keeping every morphism id; checks the composition laws.
inline FinCat fincat_from_json(const json& j, const std::string& path = "") {
  const auto& objs = detail::as_array(detail::member(j, path, "objects"), path + "/objects");
  auto ids = detail::int_array(detail::member(j, path, "identities"), path + "/identities");
  const auto& mors = detail::as_array(detail::member(j, path, "morphisms"), path + "/morphisms");
  const auto& comp = detail::as_array(detail::member(j, path, "compose"), path + "/compose");
  if (ids.size() != objs.size()) throw SchemaError(path + "/identities", "one identity per object expected");
  std::vector<int> owner(mors.size(), -1);
  for (std::size_t o = 0; o < ids.size(); ++o) {
    if (ids[o] < 0 || static_cast<std::size_t>(ids[o]) >= mors.size() || owner[ids[o]] >= 0)
      throw SchemaError(path + "/identities/" + std::to_string(o), "invalid identity id");
    owner[ids[o]] = static_cast<int>(o);
  }
  FinCat c;
  std::size_t next_object = 0;
  for (std::size_t m = 0; m < mors.size(); ++m) {
    const auto p = path + "/morphisms/" + std::to_string(m);
    if (detail::as_int(detail::member(mors[m], p, "id"), p + "/id") != static_cast<int>(m)) throw SchemaError(p + "/id", "ids must be 0, 1, 2, ...");
    int s = detail::as_int(detail::member(mors[m], p, "src"), p + "/src");
    int t = detail::as_int(detail::member(mors[m], p, "tgt"), p + "/tgt");
    if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= objs.size() || static_cast<std::size_t>(t) >= objs.size())
      throw SchemaError(p, "endpoint is not an object");
    if (owner[m] >= 0) {
      if (s != owner[m] || t != owner[m]) throw SchemaError(p, "identity has the wrong endpoints");
      if (static_cast<std::size_t>(owner[m]) != next_object) throw SchemaError(p, "identities must appear in object order");
      if (!objs[next_object].is_string()) throw SchemaError(path + "/objects/" + std::to_string(next_object), "expected a string label");
      c.add_object(objs[next_object++].get<std::string>());
      continue;
    }
    if (static_cast<std::size_t>(std::max(s, t)) >= next_object) throw SchemaError(p, "morphism precedes the identity of an endpoint");
    c.add_morphism(s, t);
  }
  if (next_object != objs.size()) throw SchemaError(path + "/morphisms", "identity morphisms missing");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const auto p = path + "/compose/" + std::to_string(i);
    auto t = detail::int_array(comp[i], p);
    if (t.size() != 3) throw SchemaError(p, "expected [g, f, g.f]");
    for (int v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= c.num_morphisms()) throw SchemaError(p, "morphism id out of range");
    try {
      c.set_composite(t[0], t[1], t[2]);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(p, e.what());
    }
  }
  try {
    c.validate();
  } catch (const std::logic_error& e) {
    throw SchemaError(path + "/compose", e.what());
  }
  return c;
}

// ---- MultiCosimplicial ----

inline json to_json(const MultiCosimplicial& x) {
  json values = json::object(), maps = json::object();
  for (std::size_t o = 0; o < x.num_objects(); ++o) {
    const auto key = detail::tuple_key(x.degrees(static_cast<int>(o)));
    values[key] = to_json(x.value(static_cast<int>(o)));
    json gens = json::array();
    for (auto& s : x.generators_out(static_cast<int>(o)))
      gens.push_back({{"coord", s.coord}, {"kind", s.coface ? "coface" : "codegeneracy"}, {"index", s.index},
                      {"map", to_json(x.generator_map(static_cast<int>(o), s))}});
    maps[key] = std::move(gens);
  }
  return {{"arity", x.arity()}, {"trunc", x.trunc()}, {"cap", x.cap()}, {"values", values}, {"maps", maps}};
}

/// Parses, then validates every value and the functoriality relations (FunctorialityError).
inline MultiCosimplicial multicosimplicial_from_json(const json& j, const std::string& path = "") {
  const int arity = detail::as_int(detail::member(j, path, "arity"), path + "/arity");
  const int trunc = detail::as_int(detail::member(j, path, "trunc"), path + "/trunc");
  const int cap = detail::as_int(detail::member(j, path, "cap"), path + "/cap");
  if (arity < 1) throw SchemaError(path + "/arity", "arity must be at least 1");
  if (trunc < 0) throw SchemaError(path + "/trunc", "truncation must be nonnegative");
  if (cap < 0) throw SchemaError(path + "/cap", "dimension cap must be nonnegative");
  const auto& values = detail::member(j, path, "values");
  const auto& maps = detail::member(j, path, "maps");
  auto lookup = [&](const json& table, const char* name, const std::vector<int>& p) -> const json& {
    const auto key = detail::tuple_key(p);
    if (!table.is_object()) throw SchemaError(path + "/" + name, "expected an object keyed by degree tuples");
    auto it = table.find(key);
    if (it == table.end()) throw SchemaError(path + "/" + name, "missing entry " + key);
    return *it;
  };
  auto value = [&](const std::vector<int>& p) {
    return sset_from_json(lookup(values, "values", p), path + "/values/" + detail::tuple_key(p));
  };
  auto gen = [&](const MultiMap& g) {
    const auto p = g.domain();
    const auto key = detail::tuple_key(p);
    int coord = 0;
    while (g[coord].is_identity()) ++coord;
    const bool coface = g[coord].codomain() > g[coord].domain();
    int index = 0;
    if (coface) {
      const auto& img = g[coord].images();
      while (index < static_cast<int>(img.size()) && img[index] == index) ++index;
    } else {
      index = collapse_set(g[coord]).front();
    }
    const auto& list = lookup(maps, "maps", p);
    detail::as_array(list, path + "/maps/" + key);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto pi = path + "/maps/" + key + "/" + std::to_string(i);
      const auto& kind = detail::member(list[i], pi, "kind");
      if (detail::as_int(detail::member(list[i], pi, "coord"), pi + "/coord") == coord && kind == (coface ? "coface" : "codegeneracy") &&
          detail::as_int(detail::member(list[i], pi, "index"), pi + "/index") == index)
        return sset_map_from_json(detail::member(list[i], pi, "map"), pi + "/map");
    }
    throw SchemaError(path + "/maps/" + key, "missing generator " + to_string(g));
  };
  MultiCosimplicial x;
  try {
    x = MultiCosimplicial::build(arity, trunc, cap, value, gen);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
  for (std::size_t o = 0; o < x.num_objects(); ++o)
    for (auto& s : x.generators_out(static_cast<int>(o))) {
      const auto& f = x.generator_map(static_cast<int>(o), s);
      const auto& src = x.value(static_cast<int>(o));
      const auto pm = path + "/maps/" + detail::tuple_key(x.degrees(static_cast<int>(o)));
      if (static_cast<int>(f.at.size()) != cap + 1) throw SchemaError(pm, "generator map needs one table per dimension");
      for (int m = 0; m <= cap; ++m)
        if (f.at[m].size() != src.count(m)) throw SchemaError(pm, "generator map table length differs from the simplex count");
    }
  x.validate();
  return x;
}

// ---- MultiMorphism / Corpus ----

inline json to_json(const MultiMorphism& f) {
  json a = json::array();
  for (auto& g : f.at) a.push_back(to_json(g));
  return a;
}

inline MultiMorphism multimorphism_from_json(const json& j, const std::string& path = "") {
  detail::as_array(j, path);
  MultiMorphism f;
  for (std::size_t o = 0; o < j.size(); ++o) f.at.push_back(sset_map_from_json(j[o], path + "/" + std::to_string(o)));
  return f;
}

inline json to_json(const Corpus& c) {
  json objects = json::array(), maps = json::array();
  for (auto& o : c.objects) objects.push_back({{"name", o.name}, {"value", to_json(o.value)}});
  for (auto& m : c.maps) maps.push_back({{"name", m.name}, {"source", m.source}, {"target", m.target}, {"map", to_json(m.map)}});
  return {{"objects", objects}, {"maps", maps}};
}

/// Objects must share arity, truncation and cap; maps are checked for naturality.
inline Corpus corpus_from_json(const json& j, const std::string& path = "") {
  Corpus c;
  const auto& objs = detail::as_array(detail::member(j, path, "objects"), path + "/objects");
  if (objs.empty()) throw SchemaError(path + "/objects", "corpus needs at least one object");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto p = path + "/objects/" + std::to_string(i);
    const auto& name = detail::member(objs[i], p, "name");
    if (!name.is_string()) throw SchemaError(p + "/name", "expected a string");
    c.objects.push_back({name.get<std::string>(), multicosimplicial_from_json(detail::member(objs[i], p, "value"), p + "/value")});
    const auto& a = c.objects.front().value;
    const auto& b = c.objects.back().value;
    if (a.arity() != b.arity() || a.trunc() != b.trunc() || a.cap() != b.cap())
      throw SchemaError(p + "/value", "arity, truncation and cap must match the first object");
  }
  const auto& maps = detail::as_array(detail::member(j, path, "maps"), path + "/maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto p = path + "/maps/" + std::to_string(i);
    const auto& name = detail::member(maps[i], p, "name");
    if (!name.is_string()) throw SchemaError(p + "/name", "expected a string");
    const int s = detail::as_int(detail::member(maps[i], p, "source"), p + "/source");
    const int t = detail::as_int(detail::member(maps[i], p, "target"), p + "/target");
    if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= c.objects.size() || static_cast<std::size_t>(t) >= c.objects.size())
      throw SchemaError(p, "source or target is not a corpus object");
    auto f = multimorphism_from_json(detail::member(maps[i], p, "map"), p + "/map");
    const auto& x = c.objects[s].value;
    if (f.at.size() != x.num_objects()) throw SchemaError(p + "/map", "one component per degree tuple expected");
    for (std::size_t o = 0; o < f.at.size(); ++o) {
      if (static_cast<int>(f.at[o].at.size()) != x.cap() + 1) throw SchemaError(p + "/map/" + std::to_string(o), "one table per dimension expected");
      for (int m = 0; m <= x.cap(); ++m)
        if (f.at[o].at[m].size() != x.value(static_cast<int>(o)).count(m))
          throw SchemaError(p + "/map/" + std::to_string(o) + "/" + std::to_string(m), "table length differs from the simplex count");
    }
    auto defect = naturality_defect(x, c.objects[t].value, f);
    if (!defect.empty()) throw SimplicialIdentityError("map " + name.get<std::string>() + ": " + defect);
    c.maps.push_back({name.get<std::string>(), static_cast<std::size_t>(s), static_cast<std::size_t>(t), std::move(f)});
  }
  return c;
}

// ---- documents ----

/// Envelope {"schema", "kind", "data"}; kinds: monotone-map, multimap, sset, sset-map, fincat, multicosimplicial, corpus.
inline json make_document(const std::string& kind, json data) {
  return {{"schema", kSchemaVersion}, {"kind", kind}, {"data", std::move(data)}};
}

inline json document(const MonotoneMap& f) { return make_document("monotone-map", to_json(f)); }
inline json document(const MultiMap& f) { return make_document("multimap", to_json(f)); }
inline json document(const TruncSSet& x) { return make_document("sset", to_json(x)); }
inline json document(const SSetMapDocument& d) { return make_document("sset-map", to_json(d)); }
inline json document(const FinCat& c) { return make_document("fincat", to_json(c)); }
inline json document(const MultiCosimplicial& x) { return make_document("multicosimplicial", to_json(x)); }
inline json document(const Corpus& c) { return make_document("corpus", to_json(c)); }

/// Checks the envelope and returns the kind.
inline std::string document_kind(const json& doc) {
  const auto& schema = detail::member(doc, "", "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchemaVersion)
    throw SchemaError("/schema", std::string("unsupported schema version, expected ") + kSchemaVersion);
  const auto& kind = detail::member(doc, "", "kind");
  if (!kind.is_string()) throw SchemaError("/kind", "expected a string");
  detail::member(doc, "", "data");
  return kind.get<std::string>();
}

/// Parses and validates the payload of any document kind, rethrowing parse errors with their byte offset.
inline json parse_document_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("byte " + std::to_string(e.byte), "parse error: " + std::string(e.what()));
  }
}

inline json read_document(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

/// Deserializes the payload to validate it; returns a one-line summary.
inline std::string validate_document(const json& doc) {
  const auto kind = document_kind(doc);
  const auto& data = doc["data"];
  if (kind == "monotone-map") return "monotone map " + to_string(monotone_from_json(data, "/data"));
  if (kind == "multimap") return "multimap " + to_string(multimap_from_json(data, "/data"));
  if (kind == "sset") {
    auto x = sset_from_json(data, "/data");
    return "simplicial set with cap " + std::to_string(x.cap()) + ", " + std::to_string(x.total()) + " simplices";
  }
  if (kind == "sset-map") {
    auto d = sset_map_document_from_json(data, "/data");
    return "simplicial map with cap " + std::to_string(d.source.cap());
  }
  if (kind == "fincat") {
    auto c = fincat_from_json(data, "/data");
    return "category with " + std::to_string(c.num_objects()) + " objects, " + std::to_string(c.num_morphisms()) + " morphisms";
  }
  if (kind == "multicosimplicial") {
    auto x = multicosimplicial_from_json(data, "/data");
    return std::to_string(x.arity()) + "-cosimplicial object, truncation " + std::to_string(x.trunc()) + ", cap " + std::to_string(x.cap());
  }
  if (kind == "corpus") {
    auto c = corpus_from_json(data, "/data");
    return "corpus with " + std::to_string(c.objects.size()) + " objects, " + std::to_string(c.maps.size()) + " maps";
  }
  throw SchemaError("/kind", "unknown kind " + kind);
}

}  // namespace cosimplex
