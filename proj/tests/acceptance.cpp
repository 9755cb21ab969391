#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <cosimplex/suites.hpp>

using namespace cosimplex;

namespace {

// Pinned thresholds.
constexpr double kCounterexampleSeconds = 1.0;
constexpr double kKanIdentitySeconds = 30.0;
constexpr double kAdjunctionSeconds = 120.0;
constexpr double kFactorizationSeconds = 60.0;
constexpr std::size_t kMinAdjunctionObjects = 10;
constexpr std::size_t kMinPairs = 20;
constexpr int kTrunc = 2;
constexpr int kCap = 2;
constexpr int kCheckDim = 2;
constexpr unsigned kSeed = 1;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  ///< 0 means no time bound
  std::function<Outcome()> run;
};

void fail(Outcome& o, const std::string& why) {
  if (o.passed) o.detail = why;
  o.passed = false;
}

std::string str(std::size_t n) { return std::to_string(n); }

const Corpus& corpus(int arity) {
  static Corpus c2 = build_corpus(2, kTrunc, kCap, kSeed), c3 = build_corpus(3, kTrunc, kCap, kSeed);
  return arity == 2 ? c2 : c3;
}

Outcome counterexample_counts() {
  auto b = build_counterexample(kTrunc, kCap);
  Outcome o{b.pi0_lx_11 == 4 && b.pi0_w_11 == 2, "pi0 LX(1,1) = " + std::to_string(b.pi0_lx_11) + ", pi0 W(1,1) = " + std::to_string(b.pi0_w_11)};
  if (!b.lx_is_skeleton.passed) fail(o, "LX is not the 0-skeleton: " + b.lx_is_skeleton.detail);
  if (!b.x_is_diag_w) fail(o, "X differs from diag W");
  return o;
}

Outcome kan_identity() {
  Outcome o{true, "n = 2, 3 at N = 2, d = 2"};
  for (int n : {2, 3}) {
    auto v = check_kan_extension_identity(n, kTrunc, kCap);
    if (!v.passed) fail(o, "n = " + std::to_string(n) + ": " + v.detail);
  }
  return o;
}

Outcome adjunction() {
  std::size_t ok = 0;
  Outcome o;
  for (auto& x : corpus(2).objects) {
    auto v = adjunction_bijection(x.value);
    if (v.passed) ++ok;
    else fail(o, x.name + ": " + v.detail);
  }
  if (ok < kMinAdjunctionObjects) fail(o, "only " + str(ok) + " objects");
  if (o.passed) o.detail = str(ok) + " corpus objects, bijective";
  return o;
}

Outcome factorization() {
  std::size_t objects = 0;
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      MatchingCategory mc(n, k);
      for (auto& m : mc.objects()) {
        ++objects;
        auto c = certify_terminal_factorization(m);
        if (!c.ok) fail(o, c.failure);
      }
    }
  if (o.passed) o.detail = str(objects) + " matching-category objects, n <= 3, k <= 3";
  return o;
}

Outcome filtration_iso() {
  std::size_t checks = 0;
  Outcome o;
  for (int n : {2, 3})
    for (auto& m : corpus(n).maps)
      for (int k = 1; k <= 2; ++k)
        for (int i = -1; i <= n * k - 2; ++i) {
          auto& c = corpus(n);
          auto v = check_prime_stage_iso(c.objects[m.source].value, c.objects[m.target].value, m.map, k, i);
          ++checks;
          if (!v.iso.passed) fail(o, m.name + " n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) + ": " + v.iso.detail);
        }
  if (o.passed) o.detail = str(checks) + " stage isomorphisms over " + str(corpus(2).maps.size() + corpus(3).maps.size()) + " corpus maps";
  return o;
}

Outcome pullback_square() {
  std::size_t checks = 0;
  Outcome o;
  for (int n : {2, 3})
    for (auto& x : corpus(n).objects)
      for (int k = 1; k <= 2; ++k)
        for (int i = -1; i <= n * k - 2; ++i) {
          auto v = check_pullback_square(x.value, k, i);
          ++checks;
          if (!v.passed) fail(o, x.name + " n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) + ": " + v.detail);
        }
  if (o.passed) o.detail = str(checks) + " squares, element-wise";
  return o;
}

Outcome cofinality() {
  std::size_t stages = 0, witnesses = 0;
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      MatchingCategory mc(n, k);
      for (int i = -1; i <= n * k - 2; ++i) {
        auto c = stage_cofinality(mc, i);
        ++stages;
        for (int w : c.terminal_witness) {
          if (w < 0) fail(o, "no terminal object, n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
          ++witnesses;
        }
        if (!c.cofinal) fail(o, "not cofinal, n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
      }
    }
  if (o.passed) o.detail = str(stages) + " stages, " + str(witnesses) + " overcategories with terminal witnesses";
  return o;
}

Outcome homotopy_cofinality() {
  std::size_t targets = 0;
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (auto& p : detail::degree_tuples(n, 2)) {
      auto v = homotopy_cofinality_proxy(p, kTrunc, kCap);
      ++targets;
      if (!v.passed) fail(o, "target " + detail::tuple_key(p) + " has " + str(v.components) + " components or nonzero reduced Betti");
    }
  if (o.passed) o.detail = str(targets) + " targets, connected, reduced Betti 0 in dims 0..1 (N = 2, d = 2)";
  return o;
}

Outcome cotensor() {
  RunConfig cfg;
  cfg.cap = kCap;
  cfg.trunc = kTrunc;
  cfg.check_dim = kCheckDim;
  auto r = run_suite("cotensor", cfg);
  r.append(run_suite("end-adjunction", cfg));
  std::size_t pairs = 0;
  Outcome o;
  for (auto& e : r.entries) {
    if (e.verdict == Verdict::fail) fail(o, e.suite + " " + e.instance + ": " + e.certificate.dump());
    pairs += e.instance.rfind("pair:", 0) == 0;
  }
  if (pairs < kMinPairs) fail(o, "only " + str(pairs) + " pairs");
  if (o.passed) o.detail = str(pairs) + " pairs isomorphic; " + str(r.entries.size() - pairs) + " adjunction and frame checks exact";
  return o;
}

Outcome tot_diagonal() {
  std::size_t objects = 0;
  Outcome o;
  for (int n : {2, 3})
    for (auto& x : corpus(n).objects) {
      auto v = tot_iso_diagonal(x.value);
      ++objects;
      if (!v.passed) fail(o, x.name + " n=" + std::to_string(n) + ": " + v.detail);
    }
  if (o.passed) o.detail = str(objects) + " corpus objects (n = 2, 3)";
  return o;
}

Outcome bk_square() {
  auto one = overcategory_nerves(1, kTrunc, kCap);
  auto phi = bk_map(one);
  auto sq = check_bk_square(2, one, phi);
  Outcome o{sq.passed, sq.detail};
  std::size_t membership = 0;
  for (auto& x : corpus(2).objects) {
    auto v = check_homset_square(x.value, one, phi, RunConfig{}.membership_limit);
    membership += v.checked_membership;
    if (!v.passed) fail(o, x.name + ": " + v.detail);
  }
  if (o.passed)
    o.detail = str(sq.simplices_checked) + " simplices; hom-set square on " + str(corpus(2).objects.size()) + " objects (" + str(membership) +
               " with holim membership)";
  return o;
}

Outcome reedy() {
  std::size_t active = 0, maps = 0;
  Outcome o;
  for (int n : {2, 3})
    for (auto& m : corpus(n).maps) {
      auto& c = corpus(n);
      auto v = check_diagonal_preserves_fibration(c.objects[m.source].value, c.objects[m.target].value, m.map, kCheckDim);
      ++maps;
      if (v.vacuous()) continue;
      ++active;
      if (!v.passed()) fail(o, m.name + " n=" + std::to_string(n) + ": " + v.detail);
    }
  if (active == 0) fail(o, "no corpus map is a capped Reedy fibration");
  if (o.passed) o.detail = str(active) + " of " + str(maps) + " maps are capped Reedy fibrations; all preserved (check_dim 2)";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "counterexample component counts", kCounterexampleSeconds, counterexample_counts},
      {2, "Kan extension identity", kKanIdentitySeconds, kan_identity},
      {3, "adjunction bijection", kAdjunctionSeconds, adjunction},
      {4, "terminal factorization", kFactorizationSeconds, factorization},
      {5, "filtration isomorphisms", 0, filtration_iso},
      {6, "pullback square", 0, pullback_square},
      {7, "stage cofinality", 0, cofinality},
      {8, "homotopy cofinality proxy", 0, homotopy_cofinality},
      {9, "cotensor and mapping complex", 0, cotensor},
      {10, "Tot of the diagonal", 0, tot_diagonal},
      {11, "comparison square", 0, bk_square},
      {12, "capped Reedy preservation", 0, reedy},
  };
  int failures = 0;
  for (auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(s).substr(0, std::to_string(s).find('.') + 3) + " s";
    if (c.limit_seconds > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
      if (s >= c.limit_seconds) fail(o, "over the time limit");
    }
    failures += !o.passed;
    std::printf("AC%02d %s %s: %s [%s]\n", c.id, o.passed ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
