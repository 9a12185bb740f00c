// Copyright 2026 The Matchstack Authors
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

// Command line front end.  All engine work goes through the C API in
// matchstack.h; this file only moves lines around.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchstack.h"

namespace {

// Owned C string from the API; frees on scope exit.
struct ApiString {
  char* ptr = nullptr;

  ~ApiString() { ms_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

int fail(const std::string& message) {
  std::cerr << "matchstack: " << message << "\n";
  return 1;
}

int fail_status(const std::string& context) {
  return fail(context + ": " + ms_last_error());
}

// Opens the line source: "-" is stdin.
std::unique_ptr<std::istream> open_input(const std::string& path, int& error) {
  if (path == "-") {
    return std::make_unique<std::istream>(std::cin.rdbuf());
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) {
    error = fail("cannot open " + path);
    return nullptr;
  }
  return file;
}

int run_gen(std::size_t n, bool exhaustive, bool seeded, std::uint64_t seed,
            std::size_t count) {
  if (exhaustive) {
    ms_history_iter* it = nullptr;
    if (ms_history_iter_new(n, &it) != MS_OK) return fail_status("gen");
    for (;;) {
      ApiString line;
      if (ms_history_iter_next(it, &line.ptr) != MS_OK) {
        ms_history_iter_free(it);
        return fail_status("gen");
      }
      if (line.ptr == nullptr) break;
      std::cout << line.ptr << "\n";
    }
    ms_history_iter_free(it);
    return 0;
  }
  (void)seeded;
  for (std::size_t i = 0; i < count; ++i) {
    ApiString line;
    if (ms_random_history(n, seed + i, &line.ptr) != MS_OK) {
      return fail_status("gen");
    }
    std::cout << line.ptr << "\n";
  }
  return 0;
}

int run_analyze(const std::string& input) {
  int error = 0;
  auto in = open_input(input, error);
  if (!in) return error;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(*in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ApiString out;
    const ms_status status = ms_analyze(line.c_str(), &out.ptr);
    if (status == MS_ERR_PARSE) {
      return fail("parse error at line " + std::to_string(line_number) + ": " +
                  ms_last_error());
    }
    if (status != MS_OK) {
      return fail("error at line " + std::to_string(line_number) + ": " +
                  ms_last_error());
    }
    std::cout << out.ptr << "\n";
  }
  return 0;
}

int run_export(const std::string& input, const std::string& what,
               const std::string& format, const std::string& out_path) {
  int error = 0;
  auto in = open_input(input, error);
  if (!in) return error;
  std::string history;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!history.empty()) return fail("export expects exactly one history");
    history = line;
  }
  if (history.empty()) return fail("export expects exactly one history");

  ApiString rendered;
  if (ms_export(history.c_str(), what.c_str(), format.c_str(), &rendered.ptr) !=
      MS_OK) {
    return fail_status("export");
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << rendered.ptr << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) return fail("cannot open " + out_path);
  out << rendered.ptr << "\n";
  return out ? 0 : fail("cannot write " + out_path);
}

extern "C" void print_report_line(const char* json_line, void*) {
  std::cout << json_line << "\n";
}

int run_verify(const std::string& suite, std::size_t max_n,
               std::size_t allow_below, bool summary_only) {
  ApiString summary;
  const ms_status status =
      ms_verify(suite.c_str(), max_n, allow_below,
                summary_only ? nullptr : &print_report_line, nullptr,
                &summary.ptr);
  if (status != MS_OK) return fail_status("verify");

  std::size_t failures = 0;
  const auto reports = nlohmann::json::parse(summary.str());
  for (const auto& report : reports) {
    failures += report.at("fail_count").get<std::size_t>();
    std::cout << report.dump() << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stack-triangulation spin-glass toolkit"};
  app.set_version_flag("--version", std::string(ms_version()));
  app.require_subcommand(1);

  std::size_t n = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  auto* gen = app.add_subcommand("gen", "Emit growth histories, one per line");
  gen->add_option("--n", n, "Number of growth steps")->required();
  auto* exhaustive_flag =
      gen->add_flag("--exhaustive", exhaustive, "All histories of length n");
  auto* seed_opt =
      gen->add_option("--seed", seed, "Random draw, reproducible per seed");
  gen->add_option("--count", count, "Histories to draw (seeds seed, seed+1, ...)")
      ->needs(seed_opt);
  seed_opt->excludes(exhaustive_flag);

  std::string analyze_input;
  auto* analyze =
      app.add_subcommand("analyze", "Analyze histories read as JSON lines");
  analyze->add_option("input", analyze_input, "History file, - for stdin")
      ->required();

  std::string export_input;
  std::string what;
  std::string format = "json";
  std::string out_path;
  auto* exp = app.add_subcommand("export", "Render one history's structures");
  exp->add_option("input", export_input, "History file, - for stdin")->required();
  exp->add_option("--what", what, "tri, tree, or dual")->required();
  exp->add_option("--format", format, "json or dot");
  exp->add_option("--out", out_path, "Output file, default stdout");

  std::string suite;
  std::size_t max_n = 0;
  std::size_t allow_below = 0;
  bool summary_only = false;
  auto* verify = app.add_subcommand(
      "verify", "Run a verification sweep; exit 0 only if every check passed");
  verify->add_option("--suite", suite,
                     "lemma1, prop2, remainders, small-props, main-lemma, "
                     "theorem, corollary, or all")
      ->required();
  verify->add_option("--max-n", max_n, "Instance size ceiling")->required();
  verify->add_option("--allow-below", allow_below,
                     "Accept bound violations on instances below this size");
  verify->add_flag("--summary-only", summary_only,
                   "Suppress per-instance lines");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    if (!exhaustive && seed_opt->count() == 0) {
      std::cerr << "matchstack: gen needs --seed or --exhaustive\n";
      return 1;
    }
    return run_gen(n, exhaustive, seed_opt->count() > 0, seed, count);
  }
  if (analyze->parsed()) return run_analyze(analyze_input);
  if (exp->parsed()) return run_export(export_input, what, format, out_path);
  if (verify->parsed()) return run_verify(suite, max_n, allow_below, summary_only);
  return 0;
}
