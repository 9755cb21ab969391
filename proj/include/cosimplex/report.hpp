#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace cosimplex {

enum class Verdict { pass, fail, cap_limited };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::cap_limited: return "cap-limited";
  }
  return "?";
}

/// One checked instance. A failing instance carries its witness in the certificate.
struct ReportEntry {
  std::string suite;
  std::string instance;
  json inputs;
  Verdict verdict = Verdict::pass;
  json certificate;
  double ms = 0;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;

  bool hard_failure() const {
    for (auto& e : entries)
      if (e.verdict == Verdict::fail) return true;
    return false;
  }

  std::size_t count(const std::string& suite, Verdict v) const {
    std::size_t n = 0;
    for (auto& e : entries) n += e.suite == suite && e.verdict == v;
    return n;
  }

  void append(const VerificationReport& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }
};

/// Times fn, which fills the verdict and certificate of the entry.
template <class Fn>
ReportEntry run_instance(const std::string& suite, const std::string& instance, json inputs, Fn&& fn) {
  ReportEntry e{suite, instance, std::move(inputs), Verdict::pass, json::object(), 0};
  const auto start = std::chrono::steady_clock::now();
  fn(e);
  e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

/// JSON lines; with timing=false the output is byte-identical across runs of the same config.
inline void write_json_lines(std::ostream& out, const VerificationReport& r, bool timing = true) {
  for (auto& e : r.entries) {
    json j{{"suite", e.suite}, {"instance", e.instance}, {"inputs", e.inputs}, {"verdict", verdict_name(e.verdict)}, {"certificate", e.certificate}};
    if (timing) j["ms"] = std::round(e.ms * 1000) / 1000;
    out << j.dump() << '\n';
  }
}

inline void write_table(std::ostream& out, const VerificationReport& r) {
  std::vector<std::string> order;
  std::map<std::string, std::array<std::size_t, 3>> counts;
  std::map<std::string, double> ms;
  for (auto& e : r.entries) {
    if (!counts.count(e.suite)) order.push_back(e.suite);
    ++counts[e.suite][static_cast<int>(e.verdict)];
    ms[e.suite] += e.ms;
  }
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %6s %6s %12s %10s\n", "suite", "pass", "fail", "cap-limited", "ms");
  out << line;
  for (auto& s : order) {
    auto& c = counts[s];
    std::snprintf(line, sizeof line, "%-16s %6zu %6zu %12zu %10.1f\n", s.c_str(), c[0], c[1], c[2], ms[s]);
    out << line;
  }
  for (auto& e : r.entries)
    if (e.verdict == Verdict::fail) out << "FAIL " << e.suite << " " << e.instance << ": " << e.certificate.dump() << '\n';
}

}  // namespace cosimplex
