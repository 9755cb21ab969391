#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "counterexample.hpp"
#include "frames.hpp"
#include "kan_extension.hpp"
#include "matching.hpp"
#include "reedy.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "tot.hpp"

namespace cosimplex {

struct RunConfig {
  int arity = 2;
  int trunc = 2;
  int cap = 3;
  int check_dim = 2;
  int k = -1;  ///< largest matching degree for factorization and filtration; -1 means trunc
  unsigned seed = 1;
  std::string corpus_file;
  /// Hom-set squares also check membership in the homotopy limit when the diagonal has at most
  /// this many simplices in total.
  std::size_t membership_limit = 200;

  int max_degree() const { return k < 0 ? trunc : k; }
  /// Cap for checks whose identities hold only while every simplex lies in the N-skeleton.
  int exact_cap() const { return std::min(cap, trunc); }

  void validate() const {
    if (arity < 1) throw std::invalid_argument("arity must be at least 1");
    if (trunc < 0) throw std::invalid_argument("truncation must be nonnegative");
    if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
    if (check_dim < 1 || check_dim > cap) throw std::invalid_argument("check-dim must lie in [1, cap]");
    if (k < -1) throw std::invalid_argument("k must be nonnegative");
  }

  json to_json() const {
    json j{{"arity", arity}, {"trunc", trunc}, {"cap", cap}, {"check_dim", check_dim}, {"k", max_degree()}, {"seed", seed}};
    if (!corpus_file.empty()) j["corpus"] = corpus_file;
    return j;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"factorization", "filtration", "cofinality", "kan-extension", "cotensor", "end-adjunction",
                                              "tot-diagonal", "bk-square", "reedy", "counterexample", "all"};
  return names;
}

namespace detail {

inline json counts_json(const TruncSSet& x) {
  json a = json::array();
  for (int m = 0; m <= x.cap(); ++m) a.push_back(x.count(m));
  return a;
}

inline Verdict verdict_of(bool ok, bool capped = false) {
  if (!ok) return Verdict::fail;
  return capped ? Verdict::cap_limited : Verdict::pass;
}

inline json horn_json(const HornWitness& h) {
  return {{"dim", h.dim}, {"missing", h.missing}, {"faces", h.faces}, {"base", h.base}, {"text", h.describe()}};
}

inline json reedy_json(const ReedyVerdict& r) {
  json j{{"passed", r.passed}, {"checked_up_to", r.checked_up_to}, {"degrees_checked", r.degrees_checked}};
  if (!r.passed) {
    j["failing_at"] = r.failing_at;
    if (r.witness) j["horn"] = horn_json(*r.witness);
  }
  return j;
}

inline std::vector<std::vector<int>> degree_tuples(int arity, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(arity, 0);
  while (true) {
    out.push_back(p);
    int j = arity - 1;
    while (j >= 0 && p[j] == max_degree) p[j--] = 0;
    if (j < 0) return out;
    ++p[j];
  }
}

/// Betti data of the nerve of a diagonal overcategory, memoized on disk under $COSIMPLEX_CACHE.
inline json cofinality_proxy_data(const std::vector<int>& target, int trunc, int cap) {
  std::optional<std::filesystem::path> file;
  if (const char* dir = std::getenv("COSIMPLEX_CACHE"); dir && *dir) {
    std::string name = "proxy";
    for (int p : target) name += "_" + std::to_string(p);
    name += "_N" + std::to_string(trunc) + "_d" + std::to_string(cap) + ".json";
    file = std::filesystem::path(dir) / name;
    std::ifstream in(*file);
    if (in) {
      try {
        auto j = json::parse(in);
        if (j.value("schema", "") == kSchemaVersion) return j["data"];
      } catch (const json::exception&) {
      }
    }
  }
  auto v = homotopy_cofinality_proxy(target, trunc, cap);
  json data{{"objects", v.objects}, {"components", v.components}, {"reduced_betti", v.betti.reduced},
            {"top_cycles", v.betti.top_cycles}, {"passed", v.passed}};
  if (file) {
    std::error_code ec;
    std::filesystem::create_directories(file->parent_path(), ec);
    std::ofstream out(*file);
    if (out) out << json{{"schema", kSchemaVersion}, {"data", data}}.dump() << '\n';
  }
  return data;
}

}  // namespace detail

/// Lazily built corpora, one per cap; a corpus file overrides the generated ones.
class CorpusCache {
 public:
  explicit CorpusCache(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg.corpus_file.empty()) {
      auto doc = read_document(cfg.corpus_file);
      if (document_kind(doc) != "corpus") throw SchemaError("/kind", "expected a corpus document");
      file_ = corpus_from_json(doc["data"], "/data");
    }
  }

  const Corpus& at_cap(int cap) {
    if (file_) return *file_;
    for (auto& [c, corpus] : built_)
      if (c == cap) return corpus;
    built_.emplace_back(cap, build_corpus(cfg_.arity, cfg_.trunc, cap, cfg_.seed));
    return built_.back().second;
  }

  bool from_file() const { return file_.has_value(); }

 private:
  RunConfig cfg_;
  std::optional<Corpus> file_;
  std::vector<std::pair<int, Corpus>> built_;
};

// ---- suites ----

/// Terminal factorizations of every object of the diagonal matching categories, against exhaustive search.
inline VerificationReport suite_factorization(const RunConfig& cfg, CorpusCache&) {
  VerificationReport r;
  for (int k = 0; k <= cfg.max_degree(); ++k) {
    json inputs{{"arity", cfg.arity}, {"k", k}};
    r.entries.push_back(run_instance("factorization", "matching(" + std::to_string(cfg.arity) + "," + std::to_string(k) + ")", inputs, [&](ReportEntry& e) {
      MatchingCategory mc(cfg.arity, k);
      std::size_t factorizations = 0, nontrivial = 0;
      for (auto& m : mc.objects()) {
        auto c = certify_terminal_factorization(m);
        if (!c.ok) {
          e.verdict = Verdict::fail;
          e.certificate = {{"object", to_string(m)}, {"failure", c.failure}};
          return;
        }
        factorizations += c.diagonal_factorizations;
        nontrivial += !terminal_factorization(m).beta.is_identity();
      }
      e.certificate = {{"objects", mc.size()}, {"diagonal_factorizations", factorizations}, {"nonidentity_diagonal_part", nontrivial}};
    }));
  }
  return r;
}

/// Stage inclusions, the S/T partition, P over C'_{i+1} against P_i, tower composition, and the pullback square.
inline VerificationReport suite_filtration(const RunConfig& cfg, CorpusCache& cache) {
  VerificationReport r;
  const auto& corpus = cache.at_cap(cfg.cap);
  const int kmax = std::min(cfg.max_degree(), corpus.objects.front().value.trunc());
  const int n = corpus.objects.front().value.arity();
  for (int k = 1; k <= kmax; ++k) {
    r.entries.push_back(run_instance("filtration", "stages(" + std::to_string(n) + "," + std::to_string(k) + ")", json{{"arity", n}, {"k", k}}, [&](ReportEntry& e) {
      MatchingCategory mc(n, k);
      json stages = json::array();
      for (int i = -1; i <= n * k - 2; ++i) {
        auto stage = filtration_stage(mc, i), prime = prime_stage(mc, i), next = filtration_stage(mc, i + 1);
        auto split = split_new_objects(mc, i);
        const bool nested = std::includes(prime.begin(), prime.end(), stage.begin(), stage.end()) &&
                            std::includes(next.begin(), next.end(), prime.begin(), prime.end());
        const bool partition = stage.size() + split.S.size() + split.T.size() == next.size();
        stages.push_back({{"i", i}, {"stage", stage.size()}, {"S", split.S.size()}, {"T", split.T.size()}, {"next", next.size()}});
        if (!nested || !partition) {
          e.verdict = Verdict::fail;
          e.certificate = {{"i", i}, {"nested", nested}, {"partition", partition}};
          return;
        }
      }
      const bool endpoints = filtration_stage(mc, n * k - 1).size() == mc.size() &&
                             filtration_stage(mc, -1).size() == static_cast<std::size_t>(std::count_if(mc.objects().begin(), mc.objects().end(), all_components_equal));
      e.verdict = detail::verdict_of(endpoints);
      e.certificate = {{"objects", mc.size()}, {"endpoints", endpoints}, {"stages", stages}};
    }));
    for (auto& m : corpus.maps) {
      const auto& x = corpus.objects[m.source].value;
      const auto& y = corpus.objects[m.target].value;
      json inputs{{"map", m.name}, {"k", k}};
      r.entries.push_back(run_instance("filtration", "prime-iso:" + m.name + "/k=" + std::to_string(k), inputs, [&](ReportEntry& e) {
        json sizes = json::array();
        for (int i = -1; i <= n * k - 2; ++i) {
          auto v = check_prime_stage_iso(x, y, m.map, k, i);
          if (!v.iso.passed) {
            e.verdict = Verdict::fail;
            e.certificate = {{"i", i}, {"mismatch", v.iso.detail}};
            return;
          }
          sizes.push_back({{"i", i}, {"prime_objects", v.prime_objects}, {"stage_objects", v.stage_objects}});
        }
        auto tower = check_tower_composition(x, y, m.map, k);
        e.verdict = detail::verdict_of(tower.passed);
        e.certificate = {{"stages", sizes}, {"tower_composite", tower.passed ? "equals the direct map" : tower.detail}};
      }));
    }
    for (auto& o : corpus.objects) {
      r.entries.push_back(run_instance("filtration", "pullback:" + o.name + "/k=" + std::to_string(k), json{{"object", o.name}, {"k", k}}, [&](ReportEntry& e) {
        json sizes = json::array();
        for (int i = -1; i <= n * k - 2; ++i) {
          auto v = check_pullback_square(o.value, k, i);
          if (!v.passed) {
            e.verdict = Verdict::fail;
            e.certificate = {{"i", i}, {"mismatch", v.detail}};
            return;
          }
          sizes.push_back({{"i", i}, {"T", v.t_objects}, {"pullback", v.sizes}});
        }
        e.certificate = {{"stages", sizes}};
      }));
    }
  }
  return r;
}

/// C_i in C'_{i+1} with terminal witnesses, and the Betti proxy for the diagonal overcategories.
inline VerificationReport suite_cofinality(const RunConfig& cfg, CorpusCache&) {
  VerificationReport r;
  const int n = cfg.arity;
  for (int k = 1; k <= cfg.max_degree(); ++k) {
    MatchingCategory mc(n, k);
    for (int i = -1; i <= n * k - 2; ++i) {
      json inputs{{"arity", n}, {"k", k}, {"i", i}};
      r.entries.push_back(run_instance("cofinality", "stage(" + std::to_string(n) + "," + std::to_string(k) + ")/i=" + std::to_string(i), inputs, [&](ReportEntry& e) {
        auto c = stage_cofinality(mc, i);
        const bool witnessed = std::all_of(c.terminal_witness.begin(), c.terminal_witness.end(), [](int w) { return w >= 0; });
        e.verdict = detail::verdict_of(c.cofinal && witnessed);
        e.certificate = {{"targets", c.terminal_witness.size()}, {"terminal_witness", c.terminal_witness}};
        if (!c.cofinal) e.certificate["disconnected_or_empty"] = c.failing;
      }));
    }
  }
  const int cap = cfg.exact_cap();
  for (auto& p : detail::degree_tuples(n, cfg.trunc)) {
    json inputs{{"target", p}, {"trunc", cfg.trunc}, {"cap", cap}};
    r.entries.push_back(run_instance("cofinality", "overcategory" + detail::tuple_key(p), inputs, [&](ReportEntry& e) {
      auto d = detail::cofinality_proxy_data(p, cfg.trunc, cap);
      e.verdict = detail::verdict_of(d["passed"].get<bool>(), true);
      e.certificate = d;
      e.certificate["betti_dims"] = "0.." + std::to_string(cap - 1);
    }));
  }
  return r;
}

/// Kan extension of the standard simplex, the unit, and the adjunction bijection on every corpus object.
inline VerificationReport suite_kan_extension(const RunConfig& cfg, CorpusCache& cache) {
  VerificationReport r;
  const int cap = cfg.exact_cap();
  json inputs{{"arity", cfg.arity}, {"trunc", cfg.trunc}, {"cap", cap}};
  r.entries.push_back(run_instance("kan-extension", "identity", inputs, [&](ReportEntry& e) {
    auto v = check_kan_extension_identity(cfg.arity, cfg.trunc, cap);
    e.verdict = detail::verdict_of(v.passed);
    e.certificate = v.passed ? json{{"objects", standard_multi(cfg.arity, cfg.trunc, cap).num_objects()}}
                             : json{{"failing_at", v.failing_at}, {"mismatch", v.detail}};
  }));
  r.entries.push_back(run_instance("kan-extension", "unit", inputs, [&](ReportEntry& e) {
    auto unit = unit_transformation(cfg.arity, cfg.trunc, cap);
    auto d = naturality_defect(standard_multi(1, cfg.trunc, cap), diagonal(standard_multi(cfg.arity, cfg.trunc, cap)), unit);
    e.verdict = detail::verdict_of(d.empty());
    e.certificate = d.empty() ? json{{"natural", true}} : json{{"mismatch", d}};
  }));
  const auto& corpus = cache.at_cap(cache.from_file() ? cfg.cap : cap);
  for (auto& o : corpus.objects)
    r.entries.push_back(run_instance("kan-extension", "adjunction:" + o.name, json{{"object", o.name}}, [&](ReportEntry& e) {
      auto v = adjunction_bijection(o.value);
      e.verdict = detail::verdict_of(v.passed);
      e.certificate = {{"maps_from_standard", v.left}, {"maps_into_diagonal", v.right}, {"injective", v.injective}, {"surjective", v.surjective}};
      if (!v.passed) e.certificate["mismatch"] = v.detail;
    }));
  return r;
}

/// Homotopy cotensor and mapping complex against exponentials on every pair; cotensor adjunction; frame of a diagonal.
inline VerificationReport suite_cotensor(const RunConfig& cfg, CorpusCache&) {
  VerificationReport r;
  for (auto& p : build_pairs(cfg.cap)) {
    json inputs{{"k", p.k_name}, {"x", p.x_name}, {"cap", cfg.cap}};
    r.entries.push_back(run_instance("cotensor", "pair:" + p.k_name + "," + p.x_name, inputs, [&](ReportEntry& e) {
      auto expo = exponential(p.k, p.x);
      auto frame = standard_frame(p.x);
      auto hc = homotopy_cotensor(p.x, p.k, frame, expo);
      auto a = check_isomorphism(expo.value, hc.limit.value, hc.comparison);
      auto mc = mapping_complex(p.k, p.x, frame, expo);
      auto b = check_isomorphism(expo.value, mc.value, mc.comparison);
      e.verdict = detail::verdict_of(a.passed && b.passed);
      e.certificate = {{"exponential", detail::counts_json(expo.value)}, {"cotensor", a.passed ? "isomorphic" : a.detail},
                       {"mapping_complex", b.passed ? "isomorphic" : b.detail}};
    }));
  }
  const std::vector<std::pair<std::string, TruncSSet>> shapes{{"point", point(1)}, {"boundary1", boundary(1, 1)}, {"interval", standard_simplex(1, 1)}};
  for (auto& [kn, k] : shapes)
    for (auto& [wn, w] : shapes)
      for (auto& [xn, x] : shapes) {
        if (xn == "point") continue;
        json inputs{{"k", kn}, {"w", wn}, {"x", xn}, {"cap", 1}};
        r.entries.push_back(run_instance("cotensor", "adjunction:" + kn + "," + wn + "," + xn, inputs, [&](ReportEntry& e) {
          auto v = check_cotensor_adjunction(k, w, x);
          e.verdict = detail::verdict_of(v.passed);
          e.certificate = {{"left", v.left}, {"right", v.right}, {"joint", v.joint}};
          if (!v.passed) e.certificate["mismatch"] = v.detail;
        }));
      }
  const int trunc = std::min(cfg.trunc, 1), cap = std::min(cfg.cap, 2);
  for (int m = 0; m <= 1; ++m) {
    json inputs{{"arity", cfg.arity}, {"trunc", trunc}, {"cap", cap}, {"level", m}};
    r.entries.push_back(run_instance("cotensor", "frame-of-diagonal/level=" + std::to_string(m), inputs, [&](ReportEntry& e) {
      auto x = standard_multi(cfg.arity, trunc, cap);
      const bool same = frame_level(diagonal(x), m) == diagonal(frame_level(x, m));
      e.verdict = detail::verdict_of(same);
      e.certificate = {{"equal", same}};
    }));
  }
  return r;
}

/// End as equalizer, and the end adjunction bijection, on small cospan diagrams.
inline VerificationReport suite_end_adjunction(const RunConfig&, CorpusCache&) {
  VerificationReport r;
  const int cap = 1;
  SSetMap inc;
  auto bd = boundary(1, cap, &inc);
  auto edge = standard_simplex(1, cap), pt = point(cap);
  auto d0 = standard_simplex_map(MonotoneMap::coface(1, 0), cap), d1 = standard_simplex_map(MonotoneMap::coface(1, 1), cap);
  const std::vector<std::pair<std::string, SSetDiagram>> ks{{"boundary->edge<-vertex0", cospan_diagram(bd, inc, pt, d0, edge)},
                                                            {"vertex1->edge<-vertex0", cospan_diagram(pt, d1, pt, d0, edge)}};
  const std::vector<std::pair<std::string, SSetDiagram>> xs{{"edge=edge<-vertex1", cospan_diagram(edge, identity_map(edge), pt, d1, edge)},
                                                            {"vertex0->edge<-vertex1", cospan_diagram(pt, d0, pt, d1, edge)}};
  const std::vector<std::pair<std::string, TruncSSet>> ws{{"point", pt}, {"boundary1", bd}, {"interval", edge}};
  for (auto& [kn, k] : ks)
    for (auto& [xn, x] : xs) {
      r.entries.push_back(run_instance("end-adjunction", "equalizer:" + kn + "|" + xn, json{{"k", kn}, {"x", xn}}, [&](ReportEntry& e) {
        auto end = end_hom(presentation(k), presentation(x));
        auto eq = end_hom_via_exponentials(k, x, end);
        auto iso = check_isomorphism(end.value, eq.limit.value, eq.comparison);
        e.verdict = detail::verdict_of(iso.passed);
        e.certificate = {{"end", detail::counts_json(end.value)}, {"equalizer", iso.passed ? "isomorphic" : iso.detail}};
      }));
      for (auto& [wn, w] : ws)
        r.entries.push_back(run_instance("end-adjunction", "bijection:" + kn + "|" + xn + "|" + wn, json{{"k", kn}, {"x", xn}, {"w", wn}}, [&](ReportEntry& e) {
          auto v = check_end_adjunction(k, x, w);
          e.verdict = detail::verdict_of(v.passed);
          e.certificate = {{"left", v.left}, {"right", v.right}, {"joint", v.joint}};
          if (!v.passed) e.certificate["mismatch"] = v.detail;
        }));
    }
  return r;
}

/// Tot X against Tot diag X on every corpus object.
inline VerificationReport suite_tot_diagonal(const RunConfig& cfg, CorpusCache& cache) {
  VerificationReport r;
  const auto& corpus = cache.at_cap(cache.from_file() ? cfg.cap : cfg.exact_cap());
  for (auto& o : corpus.objects)
    r.entries.push_back(run_instance("tot-diagonal", o.name, json{{"object", o.name}, {"trunc", o.value.trunc()}, {"cap", o.value.cap()}}, [&](ReportEntry& e) {
      auto v = tot_iso_diagonal(o.value);
      e.verdict = detail::verdict_of(v.passed);
      e.certificate = {{"tot", v.tot_counts}, {"tot_diagonal", v.diag_counts}};
      if (!v.passed) e.certificate["mismatch"] = v.detail;
    }));
  return r;
}

/// The comparison square simplex-wise, and the induced hom-set square on every corpus object.
inline VerificationReport suite_bk_square(const RunConfig& cfg, CorpusCache& cache) {
  VerificationReport r;
  const auto& corpus = cache.at_cap(cache.from_file() ? cfg.cap : cfg.exact_cap());
  const int trunc = corpus.objects.front().value.trunc(), cap = corpus.objects.front().value.cap();
  const int n = corpus.objects.front().value.arity();
  auto one = overcategory_nerves(1, trunc, cap);
  auto phi = bk_map(one);
  r.entries.push_back(run_instance("bk-square", "square", json{{"arity", n}, {"trunc", trunc}, {"cap", cap}}, [&](ReportEntry& e) {
    auto v = check_bk_square(n, one, phi);
    e.verdict = detail::verdict_of(v.passed);
    e.certificate = {{"simplices_checked", v.simplices_checked}, {"natural", v.naturality.empty()}};
    if (!v.passed) e.certificate["mismatch"] = v.detail;
  }));
  for (auto& o : corpus.objects)
    r.entries.push_back(run_instance("bk-square", "homset:" + o.name, json{{"object", o.name}}, [&](ReportEntry& e) {
      auto v = check_homset_square(o.value, one, phi, cfg.membership_limit);
      e.verdict = detail::verdict_of(v.passed);
      e.certificate = {{"elements", v.elements}, {"evaluations", v.evaluations}, {"holim_membership", v.checked_membership ? "checked" : "skipped (size)"}};
      if (!v.passed) e.certificate["mismatch"] = v.detail;
    }));
  for (auto& [name, k] : std::vector<std::pair<std::string, TruncSSet>>{{"point", point(1)}, {"discrete2", discrete(2, 1)}, {"interval", standard_simplex(1, 1)}}) {
    r.entries.push_back(run_instance("bk-square", "holim-restriction:const." + name, json{{"object", "const." + name}, {"arity", 2}, {"trunc", 1}, {"cap", 1}}, [&](ReportEntry& e) {
      auto b1 = overcategory_nerves(1, 1, 1), b2 = overcategory_nerves(2, 1, 1);
      auto x = constant_multi(k, 2, 1);
      auto hx = holim(x, b2), hd = holim(diagonal(x), b1);
      auto iso = check_isomorphism(hx.value, hd.value, holim_restriction_map(x, b2, hx, b1, hd));
      e.verdict = detail::verdict_of(iso.passed);
      e.certificate = {{"holim", detail::counts_json(hx.value)}, {"restriction", iso.passed ? "isomorphic" : iso.detail}};
    }));
  }
  return r;
}

/// Diagonal preservation of capped Reedy fibrations on every corpus map, latching maps, and Reedy's lemma on a cube.
inline VerificationReport suite_reedy(const RunConfig& cfg, CorpusCache& cache) {
  VerificationReport r;
  const auto& corpus = cache.at_cap(cfg.cap);
  for (auto& m : corpus.maps) {
    const auto& x = corpus.objects[m.source].value;
    const auto& y = corpus.objects[m.target].value;
    r.entries.push_back(run_instance("reedy", "diagonal:" + m.name, json{{"map", m.name}, {"check_dim", cfg.check_dim}}, [&](ReportEntry& e) {
      auto v = check_diagonal_preserves_fibration(x, y, m.map, cfg.check_dim);
      e.certificate = {{"reedy", detail::reedy_json(v.reedy)}};
      if (v.vacuous()) {
        e.verdict = Verdict::pass;
        e.certificate["vacuous"] = true;
        return;
      }
      e.verdict = detail::verdict_of(v.passed(), true);
      e.certificate["relative_matching_maps"] = v.to_full;
      e.certificate["full_to_diagonal_matching"] = v.full_to_diag;
      e.certificate["diagonal"] = detail::reedy_json(v.diagonal);
      if (!v.detail.empty()) e.certificate["failures"] = v.detail;
    }));
  }
  const int n = corpus.objects.front().value.arity();
  for (auto& p : detail::degree_tuples(n, corpus.objects.front().value.trunc()))
    r.entries.push_back(run_instance("reedy", "latching" + detail::tuple_key(p), json{{"at", p}, {"cap", cfg.cap}}, [&](ReportEntry& e) {
      auto v = latching_is_boundary(n, p, cfg.cap);
      e.verdict = detail::verdict_of(v.passed);
      e.certificate = {{"injective", v.injective}, {"image_is_boundary", v.image_is_boundary}, {"image_nondegenerate", v.image_nondegenerate}};
    }));
  r.entries.push_back(run_instance("reedy", "lemma:interval-cube", json{{"check_dim", cfg.check_dim}}, [&](ReportEntry& e) {
    auto q = interval_cospan_map(indiscrete_groupoid(2, cfg.cap));
    auto v = check_reedy_lemma(q, cfg.check_dim);
    e.verdict = detail::verdict_of(v.passed(), true);
    e.certificate = {{"hypotheses", v.hypotheses}, {"conclusion", v.conclusion}};
  }));
  return r;
}

/// Component counts of the Kan extension of the 0-skeleton and of W at (1,1), with certificates.
inline VerificationReport suite_counterexample(const RunConfig& cfg, CorpusCache&) {
  VerificationReport r;
  const int trunc = std::max(cfg.trunc, 1), cap = std::max(cfg.cap, 1);
  std::optional<CounterexampleBundle> b;
  r.entries.push_back(run_instance("counterexample", "components(1,1)", json{{"trunc", trunc}, {"cap", cap}}, [&](ReportEntry& e) {
    b = build_counterexample(trunc, cap);
    const bool ok = b->pi0_lx_11 == 4 && b->pi0_w_11 == 2 && b->lx_discrete && b->lx_is_skeleton.passed && b->x_is_diag_w;
    e.verdict = detail::verdict_of(ok);
    e.certificate = {{"pi0_LX_11", b->pi0_lx_11}, {"pi0_W_11", b->pi0_w_11}, {"LX_discrete", b->lx_discrete},
                     {"LX_is_0_skeleton_of_standard", b->lx_is_skeleton.passed ? json(true) : json(b->lx_is_skeleton.detail)},
                     {"X_is_diagonal_of_W", b->x_is_diag_w}};
  }));
  r.entries.push_back(run_instance("counterexample", "cofibrancy", json{{"trunc", trunc}, {"cap", cap}}, [&](ReportEntry& e) {
    const auto& c = b->cofibrancy;
    e.verdict = detail::verdict_of(c.passed && c.augmentation == 0);
    json mono = json::array();
    for (bool v : c.latching_mono) mono.push_back(v);
    e.certificate = {{"latching_mono", mono}, {"latching_vertices", c.latching_vertices}, {"augmentation_vertices", c.augmentation}};
  }));
  return r;
}

/// Runs one suite, or every suite for "all". Unknown names raise std::invalid_argument.
inline VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  CorpusCache cache(cfg);
  using Fn = std::function<VerificationReport(const RunConfig&, CorpusCache&)>;
  const std::vector<std::pair<std::string, Fn>> table{
      {"factorization", suite_factorization}, {"filtration", suite_filtration},       {"cofinality", suite_cofinality},
      {"kan-extension", suite_kan_extension}, {"cotensor", suite_cotensor},           {"end-adjunction", suite_end_adjunction},
      {"tot-diagonal", suite_tot_diagonal},   {"bk-square", suite_bk_square},         {"reedy", suite_reedy},
      {"counterexample", suite_counterexample}};
  VerificationReport r;
  for (auto& [n, fn] : table)
    if (name == "all" || name == n) r.append(fn(cfg, cache));
  if (name != "all" && r.entries.empty()) {
    bool known = false;
    for (auto& [n, fn] : table) known = known || n == name;
    if (!known) throw std::invalid_argument("unknown suite " + name);
  }
  return r;
}

}  // namespace cosimplex
