// Copyright 2026 The ifcpp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "harness/corpus.hpp"

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "support/subprocess.hpp"

namespace ifcpp {

namespace fs = std::filesystem;

const char* to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::kPass:
      return "pass";
    case CaseStatus::kWrongVerdict:
      return "wrong-verdict";
    case CaseStatus::kWrongDiagnostic:
      return "wrong-diagnostic";
    case CaseStatus::kRuntimeMismatch:
      return "runtime-mismatch";
    case CaseStatus::kHarnessError:
      return "harness-error";
  }
  return "?";
}

int CorpusReport::passed() const {
  int n = 0;
  for (const auto& [c, o] : results) {
    n += o.status == CaseStatus::kPass ? 1 : 0;
  }
  return n;
}

int CorpusReport::failed() const {
  return static_cast<int>(results.size()) - passed();
}

std::map<std::string, std::pair<int, int>> CorpusReport::per_category() const {
  std::map<std::string, std::pair<int, int>> by_cat;
  for (const auto& [c, o] : results) {
    auto& [pass, fail] = by_cat[c.category.empty() ? "(none)" : c.category];
    (o.status == CaseStatus::kPass ? pass : fail) += 1;
  }
  return by_cat;
}

std::vector<CorpusCase> parse_manifest(const std::string& manifest_path) {
  std::string text = read_file(manifest_path);
  fs::path base = fs::path(manifest_path).parent_path();

  std::vector<CorpusCase> cases;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;

    auto fail = [&](const std::string& msg) {
      throw std::runtime_error(manifest_path + ":" + std::to_string(lineno) +
                               ": " + msg);
    };

    std::istringstream ls(line);
    CorpusCase c;
    std::string verdict;
    if (!(ls >> c.name >> c.dir >> verdict)) {
      fail("expected: <name> <dir> <accept|reject> [\"substring\"] [category]");
    }
    if (verdict == "accept") {
      c.expect_accept = true;
    } else if (verdict == "reject") {
      c.expect_accept = false;
    } else {
      fail("verdict must be accept or reject, got '" + verdict + "'");
    }

    std::string rest;
    std::getline(ls, rest);
    // Optional quoted diagnostic substring.
    auto q1 = rest.find('"');
    if (q1 != std::string::npos) {
      auto q2 = rest.find('"', q1 + 1);
      if (q2 == std::string::npos) fail("unterminated diagnostic substring");
      c.diagnostic = rest.substr(q1 + 1, q2 - q1 - 1);
      rest = rest.substr(q2 + 1);
    }
    std::istringstream rs(rest);
    rs >> c.category;

    fs::path dir = c.dir;
    if (dir.is_relative()) dir = base / dir;
    c.dir = dir.lexically_normal().string();
    cases.push_back(std::move(c));
  }
  return cases;
}

namespace {

CaseOutcome run_one(const ToolchainConfig& config, const CorpusCase& c) {
  CaseOutcome outcome;
  if (!fs::is_directory(c.dir)) {
    outcome.status = CaseStatus::kHarnessError;
    outcome.detail = "missing case directory: " + c.dir;
    return outcome;
  }
  std::vector<std::string> sources = list_case_sources(c.dir);
  if (sources.empty()) {
    outcome.status = CaseStatus::kHarnessError;
    outcome.detail = "no sources in case directory: " + c.dir;
    return outcome;
  }

  std::string work = make_temp_dir("ifc_case_");
  std::string oracle_path = c.dir + "/expected_stdout.txt";
  bool has_oracle = file_exists(oracle_path);

  CompileOutcome compiled = compile_sources(
      config, sources, work, /*link=*/c.expect_accept && has_oracle, "prog");
  outcome.seconds = compiled.seconds;

  if (c.expect_accept) {
    if (!compiled.ok) {
      outcome.status = CaseStatus::kWrongVerdict;
      outcome.detail = "expected accept, compilation failed:\n" + compiled.log;
      return outcome;
    }
    if (has_oracle) {
      RunResult rr = run_process([&] {
        std::vector<std::string> argv = {compiled.binary};
        for (const std::string& a : run_args(c.dir)) argv.push_back(a);
        return argv;
      }());
      outcome.seconds += rr.seconds;
      if (rr.exit_code != 0) {
        outcome.status = CaseStatus::kRuntimeMismatch;
        outcome.detail = "program exited with " +
                         std::to_string(rr.exit_code) + "\n" + rr.err;
        return outcome;
      }
      std::string expected = read_file(oracle_path);
      if (rr.out != expected) {
        outcome.status = CaseStatus::kRuntimeMismatch;
        outcome.detail = "stdout does not match the oracle\n--- expected\n" +
                         expected + "--- actual\n" + rr.out;
        return outcome;
      }
    }
    outcome.status = CaseStatus::kPass;
    return outcome;
  }

  // Reject case.
  if (compiled.ok) {
    outcome.status = CaseStatus::kWrongVerdict;
    outcome.detail = "expected reject, but the program compiled";
    return outcome;
  }
  if (!c.diagnostic.empty() &&
      compiled.log.find(c.diagnostic) == std::string::npos) {
    outcome.status = CaseStatus::kWrongDiagnostic;
    outcome.detail = "rejected, but the log lacks \"" + c.diagnostic +
                     "\":\n" + compiled.log;
    return outcome;
  }
  outcome.status = CaseStatus::kPass;
  return outcome;
}

}  // namespace

std::vector<std::string> run_args(const std::string& case_dir) {
  std::vector<std::string> args;
  if (file_exists(case_dir + "/secret_a.txt")) {
    args.push_back(case_dir + "/secret_a.txt");
  }
  if (file_exists(case_dir + "/public.txt")) {
    args.push_back(case_dir + "/public.txt");
  }
  return args;
}

CorpusReport run_corpus(const ToolchainConfig& config,
                        const std::vector<CorpusCase>& cases,
                        const std::string& filter_category, int jobs) {
  std::vector<CorpusCase> selected;
  for (const CorpusCase& c : cases) {
    if (filter_category.empty() || c.category == filter_category) {
      selected.push_back(c);
    }
  }

  CorpusReport report;
  report.results.resize(selected.size());
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 2;
  }
  jobs = std::min<int>(jobs, std::max<int>(1, (int)selected.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= selected.size()) return;
      const CorpusCase& c = selected[idx];
      CaseOutcome outcome;
      try {
        outcome = run_one(config, c);
      } catch (const std::exception& e) {
        outcome.status = CaseStatus::kHarnessError;
        outcome.detail = e.what();
      }
      report.results[idx] = {c, outcome};
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& [c, o] : report.results) report.total_seconds += o.seconds;
  return report;
}

std::vector<std::pair<std::string, std::pair<bool, std::string>>>
run_fix_checks(const ToolchainConfig& config,
               const std::vector<CorpusCase>& cases) {
  std::vector<std::pair<std::string, std::pair<bool, std::string>>> results;
  for (const CorpusCase& c : cases) {
    if (c.expect_accept) continue;
    std::string detail;
    bool ok = false;
    try {
      std::string work = make_temp_dir("ifc_fix_");
      std::vector<std::string> fixed_sources;
      int fixes_applied = 0;
      for (const std::string& src : list_case_sources(c.dir)) {
        std::string text = read_file(src);
        std::istringstream in(text);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) {
          auto pos = line.find("// ifc-fix:");
          if (pos == std::string::npos) {
            out << line << "\n";
            continue;
          }
          ++fixes_applied;
          std::string action = line.substr(pos + 11);
          auto a = action.find_first_not_of(" \t");
          action = a == std::string::npos ? "" : action.substr(a);
          if (action == "remove") {
            continue;  // drop the offending line
          }
          const std::string kReplace = "replace ";
          if (action.rfind(kReplace, 0) == 0) {
            out << action.substr(kReplace.size()) << "\n";
            continue;
          }
          throw std::runtime_error(src + ": unknown ifc-fix action: " + action);
        }
        std::string dst = work + "/" + fs::path(src).filename().string();
        write_file(dst, out.str());
        fixed_sources.push_back(dst);
      }
      if (fixes_applied == 0) {
        detail = "reject case carries no // ifc-fix annotation";
      } else {
        CompileOutcome compiled =
            compile_sources(config, fixed_sources, work, false, "prog");
        ok = compiled.ok;
        if (!ok) detail = "fixed program still rejected:\n" + compiled.log;
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    results.push_back({c.name, {ok, detail}});
  }
  return results;
}

std::string report_to_json(const CorpusReport& report) {
  nlohmann::json j;
  j["cases"] = nlohmann::json::array();
  for (const auto& [c, o] : report.results) {
    j["cases"].push_back({{"name", c.name},
                          {"category", c.category},
                          {"expected", c.expect_accept ? "accept" : "reject"},
                          {"status", to_string(o.status)},
                          {"seconds", o.seconds},
                          {"detail", o.detail}});
  }
  j["passed"] = report.passed();
  j["failed"] = report.failed();
  j["total_seconds"] = report.total_seconds;
  nlohmann::json cats;
  for (const auto& [cat, pf] : report.per_category()) {
    cats[cat] = {{"pass", pf.first}, {"fail", pf.second}};
  }
  j["categories"] = cats;
  return j.dump(2);
}

std::string format_report(const CorpusReport& report) {
  std::ostringstream out;
  for (const auto& [c, o] : report.results) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%6.2fs", o.seconds);
    out << (o.status == CaseStatus::kPass ? "PASS" : "FAIL") << " " << buf
        << "  " << c.name << " [" << c.category << "/"
        << (c.expect_accept ? "accept" : "reject") << "]";
    if (o.status != CaseStatus::kPass) {
      out << "  (" << to_string(o.status) << ")\n" << o.detail;
    }
    out << "\n";
  }
  out << report.passed() << " passed, " << report.failed() << " failed\n";
  return out.str();
}

}  // namespace ifcpp
