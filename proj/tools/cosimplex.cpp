#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <cosimplex/suites.hpp>

using namespace cosimplex;

namespace {

struct Output {
  std::string file;
  std::string format = "json";
  bool timing = true;
};

void add_run_options(CLI::App* sub, RunConfig& cfg, Output& out) {
  sub->add_option("--arity,--n", cfg.arity, "number of cosimplicial directions")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--trunc", cfg.trunc, "cosimplicial truncation N")->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--cap", cfg.cap, "simplicial dimension cap d")->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--check-dim", cfg.check_dim, "largest horn dimension for Kan checks")->capture_default_str();
  sub->add_option("--k", cfg.k, "largest matching degree (default: trunc)")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", cfg.seed, "seed for the randomized corpus objects")->capture_default_str();
  sub->add_option("--corpus", cfg.corpus_file, "corpus document to use instead of the generated corpus")->check(CLI::ExistingFile);
  sub->add_option("--out", out.file, "write the report (JSON lines) or document to this file");
  sub->add_option("--format", out.format, "json or table")->capture_default_str()->check(CLI::IsMember({"json", "table"}));
  sub->add_flag("!--no-timing", out.timing, "omit timings so reports are byte-identical across runs");
}

int emit_report(const VerificationReport& r, const Output& out) {
  std::ofstream file;
  if (!out.file.empty()) {
    file.open(out.file);
    if (!file) throw std::runtime_error("cannot write " + out.file);
  }
  std::ostream& lines = out.file.empty() ? std::cout : file;
  if (out.format == "json" || !out.file.empty()) write_json_lines(lines, r, out.timing);
  write_table(out.format == "table" ? std::cout : std::cerr, r);
  return r.hard_failure() ? 1 : 0;
}

void emit_document(const json& doc, const Output& out) {
  if (out.file.empty()) {
    std::cout << doc.dump(1) << '\n';
    return;
  }
  std::ofstream file(out.file);
  if (!file) throw std::runtime_error("cannot write " + out.file);
  file << doc.dump(1) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for truncated multicosimplicial simplicial sets"};
  app.require_subcommand(1);
  RunConfig cfg;
  Output out;
  std::string suite;

  for (auto& name : suite_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " suite");
    add_run_options(sub, cfg, out);
    sub->callback([&suite, name] { suite = name; });
  }

  std::string what = "corpus";
  int degree = 1;
  auto* dump = app.add_subcommand("dump", "write an object as a JSON document");
  add_run_options(dump, cfg, out);
  dump->add_option("what", what, "corpus, standard, zero-skeleton, simplex or boundary")
      ->check(CLI::IsMember({"corpus", "standard", "zero-skeleton", "simplex", "boundary"}))
      ->capture_default_str();
  dump->add_option("--degree", degree, "degree for simplex and boundary")->capture_default_str()->check(CLI::NonNegativeNumber);

  std::string input;
  auto* validate = app.add_subcommand("validate", "parse and validate a JSON document");
  validate->add_option("file", input, "document to check")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      std::cout << validate_document(read_document(input)) << '\n';
      return 0;
    }
    if (*dump) {
      cfg.validate();
      if (what == "corpus") emit_document(document(build_corpus(cfg.arity, cfg.trunc, cfg.cap, cfg.seed)), out);
      else if (what == "standard") emit_document(document(standard_multi(cfg.arity, cfg.trunc, cfg.cap)), out);
      else if (what == "zero-skeleton") emit_document(document(zero_skeleton(standard_multi(cfg.arity, cfg.trunc, cfg.cap))), out);
      else if (what == "simplex") emit_document(document(standard_simplex(degree, cfg.cap)), out);
      else emit_document(document(boundary(degree, cfg.cap)), out);
      return 0;
    }
    return emit_report(run_suite(suite, cfg), out);
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << e.what() << '\n';
  } catch (const SimplicialIdentityError& e) {
    std::cerr << "invalid simplicial set: " << e.what() << '\n';
  } catch (const FunctorialityError& e) {
    std::cerr << "invalid cosimplicial object: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
