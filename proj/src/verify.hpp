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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace matchstack {

// Receives one JSON line per instance, in enumeration order.
using ReportSink = std::function<void(const std::string&)>;

struct SweepReport {
  std::string suite;
  std::size_t instance_count = 0;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  Json failures = Json::array();  // first failures, capped
  bool failures_truncated = false;
  double wall_time_seconds = 0;
  Json extra = Json::object();  // suite-specific summary fields

  Json to_json() const;
};

/*
 * Suites:
 *   lemma1      transfer degeneracy vector == spin-enumeration oracle,
 *               histories of length 0..max_n (max_n <= 6)
 *   prop2       history-recursive combine evaluation == tree evaluation,
 *               histories of length 1..max_n (max_n <= 7)
 *   remainders  remainder count/generator match, one-pass strip leaves a
 *               remainder-free tree of at least a third the size, stripped
 *               vector dominated; trees of size 1..max_n (max_n <= 10)
 *   small-props the proven psi floors per small shape class (max_n unused)
 *   main-lemma  chain decomposition witness for every remainder-free tree of
 *               size 4..max_n (max_n <= 10)
 *   theorem     exact degeneracy bound verdicts (exponent denominators 36 and
 *               72) on all histories of length <= max_n (max_n <= 7) plus 500
 *               fixed-seed random instances of length <= 60
 *   corollary   matching bound verdicts (denominators 72 and 144) on the same
 *               instances
 *
 * "all" expands to every suite with the same arguments.  allow_below
 * whitelists bound violations on instances smaller than the given size
 * (theorem: triangulation size, corollary: dual size); whitelisted instances
 * count as passes but stay listed in the summary's violation map.
 */
std::vector<SweepReport> run_suites(const std::string& name, std::size_t max_n,
                                    std::size_t allow_below, const ReportSink& sink);

}  // namespace matchstack
