/// \file
/// Result reports shared by the CLI and the verification suites.

#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hooklie/cdes.hpp"
#include "hooklie/combinat.hpp"

namespace hooklie {

using ojson = nlohmann::ordered_json;

struct Assertion {
  std::string name;
  std::string statement;  // the mathematical claim being checked
  bool passed = true;
  std::string detail;
};

enum class OutputFormat { kJson, kCsv, kText };

struct Report {
  std::string command;
  ojson parameters = ojson::object();
  ojson results = ojson::object();
  std::vector<Assertion> assertions;
  double elapsed_ms = 0.0;

  bool passed() const {
    for (const auto& a : assertions)
      if (!a.passed) return false;
    return true;
  }

  Assertion& check(std::string name, std::string statement, bool ok, std::string detail = {}) {
    assertions.push_back({std::move(name), std::move(statement), ok, std::move(detail)});
    return assertions.back();
  }

  /// Everything except timing; equal inputs give byte-identical payloads.
  ojson payload() const {
    ojson j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    ojson as = ojson::array();
    for (const auto& a : assertions)
      as.push_back({{"name", a.name}, {"statement", a.statement}, {"passed", a.passed}, {"detail", a.detail}});
    j["assertions"] = as;
    j["passed"] = passed();
    return j;
  }

  ojson to_json() const {
    ojson j = payload();
    j["timing"] = {{"elapsed_ms", elapsed_ms}};
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << command << "  " << parameters.dump() << "\n";
    if (!results.empty()) os << results.dump(2) << "\n";
    for (const auto& a : assertions) {
      os << (a.passed ? "[pass] " : "[FAIL] ") << a.name << ": " << a.statement;
      if (!a.detail.empty()) os << " (" << a.detail << ")";
      os << "\n";
    }
    os << (passed() ? "ok" : "FAILED") << "\n";
    return os.str();
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "assertion,passed,detail\n";
    for (const auto& a : assertions) {
      std::string d = a.detail;
      for (auto& c : d)
        if (c == ',' || c == '\n') c = ';';
      os << a.name << "," << (a.passed ? "true" : "false") << "," << d << "\n";
    }
    return os.str();
  }

  std::string render(OutputFormat f) const {
    switch (f) {
      case OutputFormat::kJson: return to_json().dump(2) + "\n";
      case OutputFormat::kCsv: return to_csv();
      case OutputFormat::kText: return to_text();
    }
    return {};
  }
};

/// Multiplicity table as [{"k": 0, "value": "<decimal>"}, ...]; values stay
/// lossless beyond 64 bits.
inline ojson int_table(const std::vector<Int>& v) {
  ojson arr = ojson::array();
  for (std::size_t k = 0; k < v.size(); ++k) arr.push_back({{"k", k}, {"value", v[k].str()}});
  return arr;
}

inline ojson subset_json(const Subset& s) { return s.members(); }

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Extension dump: one compact record per line, then the fiber table.
inline std::string extension_dump(const CyclicExtensionSolution& sol) {
  std::ostringstream os;
  os << "{\"format\":\"hooklie-extension\",\"version\":1,\"mu\":" << ojson(sol.mu.parts()).dump()
     << ",\"n\":" << sol.n << ",\n\"records\":[\n";
  for (std::size_t i = 0; i < sol.records.size(); ++i) {
    const auto& r = sol.records[i];
    ojson rec;
    rec["perm"] = r.pi.images();
    rec["des"] = subset_json(r.des);
    rec["cdes"] = subset_json(r.cdes);
    rec["p"] = r.p_image.images();
    os << rec.dump() << (i + 1 < sol.records.size() ? ",\n" : "\n");
  }
  os << "],\n\"fibers\":";
  ojson fib = ojson::array();
  for (const auto& [j, c] : sol.fibers.c)
    if (c != 0) fib.push_back({{"J", subset_json(j)}, {"count", c}});
  os << fib.dump() << "}\n";
  return os.str();
}

}  // namespace hooklie
