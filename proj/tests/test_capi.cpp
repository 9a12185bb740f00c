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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "matchstack.h"

namespace {

// Fetches a string-valued result and frees the C buffer.
template <typename Fn>
std::string fetch(Fn fn) {
  char* out = nullptr;
  REQUIRE(fn(&out) == MS_OK);
  REQUIRE(out != nullptr);
  std::string s = out;
  ms_string_free(out);
  return s;
}

struct TriHandle {
  ms_triangulation* t = nullptr;

  explicit TriHandle(const char* history) {
    REQUIRE(ms_triangulation_from_history(history, &t) == MS_OK);
  }
  ~TriHandle() { ms_triangulation_free(t); }
};

}  // namespace

TEST_CASE("version and error state") {
  CHECK(ms_version() != nullptr);
  CHECK(ms_last_error() != nullptr);
}

TEST_CASE("history counting and enumeration") {
  CHECK(fetch([](char** out) { return ms_history_count(5, out); }) == "945");
  CHECK(fetch([](char** out) { return ms_history_count(0, out); }) == "1");

  ms_history_iter* it = nullptr;
  REQUIRE(ms_history_iter_new(2, &it) == MS_OK);
  std::vector<std::string> seen;
  for (;;) {
    char* line = nullptr;
    REQUIRE(ms_history_iter_next(it, &line) == MS_OK);
    if (line == nullptr) break;
    seen.push_back(line);
    ms_string_free(line);
  }
  ms_history_iter_free(it);
  CHECK(seen == std::vector<std::string>{"[0,0]", "[0,1]", "[0,2]"});
}

TEST_CASE("random histories are reproducible through the C API") {
  const std::string a =
      fetch([](char** out) { return ms_random_history(12, 99, out); });
  const std::string b =
      fetch([](char** out) { return ms_random_history(12, 99, out); });
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("triangulation handles expose counts and JSON") {
  TriHandle h("[0]");
  size_t value = 0;
  CHECK(ms_triangulation_vertex_count(h.t, &value) == MS_OK);
  CHECK(value == 4);
  CHECK(ms_triangulation_inner_face_count(h.t, &value) == MS_OK);
  CHECK(value == 3);
  CHECK(ms_triangulation_edge_count(h.t, &value) == MS_OK);
  CHECK(value == 6);
  const std::string json =
      fetch([&](char** out) { return ms_triangulation_to_json(h.t, out); });
  CHECK(json.find("\"vertices\":4") != std::string::npos);
}

TEST_CASE("degeneracy and oracle counts through the C API") {
  TriHandle h("[0]");
  CHECK(fetch([&](char** out) { return ms_degeneracy(h.t, out); }) == "6");
  CHECK(fetch([&](char** out) { return ms_count_groundstates(h.t, out); }) == "6");
  CHECK(fetch([&](char** out) { return ms_count_intersecting_sets(h.t, out); }) ==
        "3");

  TriHandle two("[0,0]");
  CHECK(fetch([&](char** out) { return ms_degeneracy_vector(two.t, out); }) ==
        R"(["1","2","1","1"])");
}

TEST_CASE("tree handles") {
  TriHandle h("[0,0]");
  ms_tree* tree = nullptr;
  REQUIRE(ms_triangulation_tree(h.t, &tree) == MS_OK);
  size_t size = 0;
  CHECK(ms_tree_size(tree, &size) == MS_OK);
  CHECK(size == 2);
  const std::string json =
      fetch([&](char** out) { return ms_tree_to_json(tree, out); });
  CHECK(json == R"({"label":null,"children":[{"label":1,"children":[]}]})");
  CHECK(fetch([&](char** out) { return ms_tree_history(tree, out); }) == "[0,0]");
  CHECK(fetch([&](char** out) { return ms_tree_root_vector(tree, out); }) ==
        R"(["1","2","1","1"])");
  const std::string dot =
      fetch([&](char** out) { return ms_tree_to_dot(tree, out); });
  CHECK(dot.find("graph tree") != std::string::npos);
  ms_tree_free(tree);

  ms_tree* parsed = nullptr;
  REQUIRE(ms_tree_parse(json.c_str(), &parsed) == MS_OK);
  CHECK(fetch([&](char** out) { return ms_tree_to_json(parsed, out); }) == json);
  ms_tree_free(parsed);

  TriHandle base("[]");
  ms_tree* none = nullptr;
  CHECK(ms_triangulation_tree(base.t, &none) == MS_ERR_PRECONDITION);
  CHECK(none == nullptr);
}

TEST_CASE("dual handles") {
  TriHandle h("[0]");
  ms_dual* d = nullptr;
  REQUIRE(ms_triangulation_dual(h.t, &d) == MS_OK);
  size_t value = 0;
  CHECK(ms_dual_vertex_count(d, &value) == MS_OK);
  CHECK(value == 4);
  CHECK(ms_dual_edge_count(d, &value) == MS_OK);
  CHECK(value == 6);
  CHECK(fetch([&](char** out) { return ms_dual_perfect_matchings(d, out); }) ==
        "3");
  const std::string dot = fetch([&](char** out) { return ms_dual_to_dot(d, out); });
  CHECK(dot.find("graph dual") != std::string::npos);
  const std::string json =
      fetch([&](char** out) { return ms_dual_to_json(d, out); });
  CHECK(json.find("\"face_of\"") != std::string::npos);
  ms_dual_free(d);
}

TEST_CASE("bound predicates through the C API") {
  int verdict = -1;
  CHECK(ms_golden_power_leq(4, "7", &verdict) == MS_OK);
  CHECK(verdict == 1);
  CHECK(ms_golden_power_leq(4, "6", &verdict) == MS_OK);
  CHECK(verdict == 0);
  CHECK(ms_golden_power_leq(4, "x", &verdict) == MS_ERR_PARSE);

  CHECK(ms_theorem_bound_check(5, "8", 36, &verdict) == MS_OK);
  CHECK(verdict == 1);
  CHECK(ms_theorem_bound_check(3, "6", 36, &verdict) == MS_OK);
  CHECK(verdict == 0);
  CHECK(ms_corollary_bound_check(2, "3", 72, &verdict) == MS_OK);
  CHECK(verdict == 0);
  CHECK(ms_corollary_bound_check(6, "4", 72, &verdict) == MS_OK);
  CHECK(verdict == 1);
}

TEST_CASE("analyze composes the full report") {
  char* out = nullptr;
  REQUIRE(ms_analyze("[0]", &out) == MS_OK);
  const std::string report = out;
  ms_string_free(out);
  CHECK(report.find("\"degeneracy\":\"6\"") != std::string::npos);
  CHECK(report.find("\"dual_vertices\":4") != std::string::npos);
  CHECK(report.find("\"matchings\":\"3\"") != std::string::npos);
  // Key order is part of the format.
  CHECK(report.find("\"degeneracy\"") < report.find("\"dual_vertices\""));
  CHECK(report.find("\"dual_vertices\"") < report.find("\"matchings\""));
}

TEST_CASE("export selects structure and format") {
  char* out = nullptr;
  REQUIRE(ms_export("[0,0]", "tree", "json", &out) == MS_OK);
  CHECK(std::string(out) ==
        R"({"label":null,"children":[{"label":1,"children":[]}]})");
  ms_string_free(out);

  out = nullptr;
  REQUIRE(ms_export("[0]", "dual", "dot", &out) == MS_OK);
  CHECK(std::string(out).find("graph dual") != std::string::npos);
  ms_string_free(out);

  out = nullptr;
  REQUIRE(ms_export("[0]", "tri", "json", &out) == MS_OK);
  CHECK(std::string(out).find("\"faces\"") != std::string::npos);
  ms_string_free(out);

  out = nullptr;
  CHECK(ms_export("[0]", "tri", "dot", &out) == MS_ERR_UNKNOWN_NAME);
  CHECK(ms_export("[0]", "nonsense", "json", &out) == MS_ERR_UNKNOWN_NAME);
  CHECK(ms_export("[0]", "tree", "xml", &out) == MS_ERR_UNKNOWN_NAME);
}

TEST_CASE("error codes for bad input") {
  ms_triangulation* t = nullptr;
  CHECK(ms_triangulation_from_history("[", &t) == MS_ERR_PARSE);
  CHECK(std::strlen(ms_last_error()) > 0);
  CHECK(ms_triangulation_from_history("[9]", &t) == MS_ERR_INDEX_RANGE);
  CHECK(ms_triangulation_from_history(nullptr, &t) == MS_ERR_INVALID_ARGUMENT);
  CHECK(ms_triangulation_from_history("[0]", nullptr) ==
        MS_ERR_INVALID_ARGUMENT);

  ms_tree* tree = nullptr;
  CHECK(ms_tree_parse(R"({"label":null,"children":[{"label":7}]})", &tree) ==
        MS_ERR_PARSE);

  char* out = nullptr;
  CHECK(ms_verify("nonsense", 2, 0, nullptr, nullptr, &out) ==
        MS_ERR_UNKNOWN_NAME);
  CHECK(ms_verify("lemma1", 30, 0, nullptr, nullptr, &out) == MS_ERR_TOO_LARGE);
}

namespace {

extern "C" void count_sink(const char* line, void* user_data) {
  auto* lines = static_cast<std::vector<std::string>*>(user_data);
  lines->push_back(line);
}

}  // namespace

TEST_CASE("verify streams instances and returns a summary") {
  std::vector<std::string> lines;
  char* summary = nullptr;
  REQUIRE(ms_verify("lemma1", 2, 0, &count_sink, &lines, &summary) == MS_OK);
  REQUIRE(summary != nullptr);
  const std::string text = summary;
  ms_string_free(summary);
  // Histories of length 0, 1, 2: 1 + 1 + 3 instances.
  CHECK(lines.size() == 5);
  for (const std::string& line : lines) {
    CHECK(line.find("\"pass\":true") != std::string::npos);
  }
  CHECK(text.find("\"suite\":\"lemma1\"") != std::string::npos);
  CHECK(text.find("\"instance_count\":5") != std::string::npos);
  CHECK(text.find("\"fail_count\":0") != std::string::npos);
}
