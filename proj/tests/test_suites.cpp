#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <cosimplex/suites.hpp>

using namespace cosimplex;

namespace {

RunConfig small() {
  RunConfig c;
  c.arity = 2;
  c.trunc = 1;
  c.cap = 2;
  c.check_dim = 2;
  return c;
}

}  // namespace

TEST_CASE("every suite passes on a small configuration", "[suites]") {
  auto cfg = small();
  for (auto& name : suite_names()) {
    if (name == "all") continue;
    auto r = run_suite(name, cfg);
    INFO(name);
    CHECK_FALSE(r.entries.empty());
    for (auto& e : r.entries) {
      INFO(e.instance << " " << e.certificate.dump());
      CHECK(e.suite == name);
      CHECK(e.verdict != Verdict::fail);
    }
  }
}

TEST_CASE("unknown suites and bad configurations are rejected", "[suites]") {
  CHECK_THROWS_AS(run_suite("nonsense", small()), std::invalid_argument);
  auto cfg = small();
  cfg.check_dim = 3;
  CHECK_THROWS_AS(run_suite("reedy", cfg), std::invalid_argument);
  cfg = small();
  cfg.arity = 0;
  CHECK_THROWS_AS(run_suite("factorization", cfg), std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from timing", "[suites]") {
  auto cfg = small();
  std::ostringstream a, b;
  write_json_lines(a, run_suite("tot-diagonal", cfg), false);
  write_json_lines(b, run_suite("tot-diagonal", cfg), false);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\"ms\"") == std::string::npos);
}

TEST_CASE("counterexample report carries the component counts", "[suites]") {
  auto r = run_suite("counterexample", small());
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].certificate["pi0_LX_11"] == 4);
  CHECK(r.entries[0].certificate["pi0_W_11"] == 2);
  CHECK_FALSE(r.hard_failure());
}

TEST_CASE("cofinality proxy results are cached on disk", "[suites]") {
  auto dir = std::filesystem::temp_directory_path() / ("cosimplex-cache-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ::setenv("COSIMPLEX_CACHE", dir.c_str(), 1);
  auto first = detail::cofinality_proxy_data({1, 1}, 1, 1);
  CHECK(std::filesystem::exists(dir / "proxy_1_1_N1_d1.json"));
  auto second = detail::cofinality_proxy_data({1, 1}, 1, 1);
  CHECK(first == second);
  ::unsetenv("COSIMPLEX_CACHE");
  std::filesystem::remove_all(dir);
}

TEST_CASE("a written corpus drives the suites", "[suites]") {
  auto cfg = small();
  auto file = std::filesystem::temp_directory_path() / ("cosimplex-corpus-" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream out(file);
    out << document(build_corpus(cfg.arity, cfg.trunc, cfg.exact_cap(), cfg.seed)).dump();
  }
  cfg.corpus_file = file.string();
  auto from_file = run_suite("tot-diagonal", cfg);
  cfg.corpus_file.clear();
  auto generated = run_suite("tot-diagonal", cfg);
  std::filesystem::remove(file);
  REQUIRE(from_file.entries.size() == generated.entries.size());
  for (std::size_t i = 0; i < generated.entries.size(); ++i) CHECK(from_file.entries[i].certificate == generated.entries[i].certificate);
}
