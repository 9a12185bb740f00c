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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "bounds.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "parallel.hpp"

namespace matchstack {

namespace {

constexpr std::size_t kMaxStoredFailures = 200;
constexpr std::size_t kTreeBatch = 4096;

// Fixed-seed random leg of the bound sweeps.
constexpr std::size_t kRandomBoundInstances = 500;
constexpr std::size_t kRandomBoundMaxSteps = 60;
constexpr std::uint64_t kRandomBoundSeed = 9221;

class Tally {
 public:
  Tally(std::string suite, const ReportSink& sink) : sink_(sink) {
    report_.suite = std::move(suite);
    started_ = std::chrono::steady_clock::now();
  }

  void record(Json line, bool pass) {
    line["pass"] = pass;
    ++report_.instance_count;
    if (pass) {
      ++report_.pass_count;
    } else {
      ++report_.fail_count;
      if (report_.failures.size() < kMaxStoredFailures) {
        report_.failures.push_back(line);
      } else {
        report_.failures_truncated = true;
      }
    }
    if (sink_) sink_(line.dump());
  }

  Json& extra() { return report_.extra; }

  SweepReport finish() {
    report_.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started_)
            .count();
    return std::move(report_);
  }

 private:
  SweepReport report_;
  const ReportSink& sink_;
  std::chrono::steady_clock::time_point started_;
};

// Evaluates fn on every item, possibly concurrently, then records results in
// enumeration order.
template <typename T, typename Fn>
void sweep(const std::vector<T>& items, Tally& tally, Fn fn) {
  std::vector<std::pair<Json, bool>> results(items.size());
  parallel_chunks(items.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) results[i] = fn(items[i]);
  });
  for (auto& [line, pass] : results) tally.record(std::move(line), pass);
}

// Tree sweeps stream in bounded batches so the ~3 * 10^5 trees of size <= 9
// are never materialized at once.
template <typename Fn>
void sweep_trees(std::size_t min_size, std::size_t max_size, Tally& tally, Fn fn) {
  std::vector<ColoredTernaryTree> batch;
  batch.reserve(kTreeBatch);
  auto flush = [&] {
    sweep(batch, tally, fn);
    batch.clear();
  };
  for (std::size_t size = min_size; size <= max_size; ++size) {
    for_each_tree(size, [&](const ColoredTernaryTree& t) {
      batch.push_back(t);
      if (batch.size() == kTreeBatch) flush();
    });
    flush();
  }
}

void check_max_n(std::size_t max_n, std::size_t limit, const char* suite) {
  if (max_n > limit) {
    throw TooLargeError(std::string(suite) + " caps max-n at " +
                        std::to_string(limit));
  }
}

SweepReport run_lemma1(std::size_t max_n, const ReportSink& sink) {
  check_max_n(max_n, 6, "lemma1");
  Tally tally("lemma1", sink);
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<GrowthHistory> histories;
    for_each_history(n, [&](const GrowthHistory& h) { histories.push_back(h); });
    sweep(histories, tally, [](const GrowthHistory& h) {
      const StackTriangulation t = StackTriangulation::from_history(h);
      const DegeneracyVector expected = degeneracy_vector(t);
      const DegeneracyVector got = count_satisfying_by_class(t);
      Json line;
      line["suite"] = "lemma1";
      line["instance"] = history_to_json(h);
      line["expected"] = vector_to_json(expected);
      line["got"] = vector_to_json(got);
      return std::make_pair(std::move(line), expected == got);
    });
  }
  return tally.finish();
}

SweepReport run_prop2(std::size_t max_n, const ReportSink& sink) {
  check_max_n(max_n, 7, "prop2");
  Tally tally("prop2", sink);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<GrowthHistory> histories;
    for_each_history(n, [&](const GrowthHistory& h) { histories.push_back(h); });
    sweep(histories, tally, [](const GrowthHistory& h) {
      const StackTriangulation t = StackTriangulation::from_history(h);
      const DegeneracyVector by_combine = degeneracy_vector_recursive(t);
      const DegeneracyVector by_tree = root_vector(to_tree(t));
      Json line;
      line["suite"] = "prop2";
      line["instance"] = history_to_json(h);
      line["expected"] = vector_to_json(by_tree);
      line["got"] = vector_to_json(by_combine);
      return std::make_pair(std::move(line), by_combine == by_tree);
    });
  }
  return tally.finish();
}

bool dominated(const DegeneracyVector& low, const DegeneracyVector& high) {
  for (std::size_t s = 0; s < 4; ++s) {
    if (low[s] > high[s]) return false;
  }
  return true;
}

SweepReport run_remainders(std::size_t max_n, const ReportSink& sink) {
  check_max_n(max_n, 10, "remainders");
  Tally tally("remainders", sink);
  sweep_trees(1, max_n, tally, [](const ColoredTernaryTree& t) {
    const RemainderReport report = find_remainders(t);
    std::set<std::size_t> generators;
    for (const Remainder& r : report.remainders) generators.insert(r.generator);
    const bool generators_distinct =
        generators.size() == report.remainders.size();

    const ColoredTernaryTree stripped = strip_remainders(t);
    const bool strip_terminal = find_remainders(stripped).empty();
    const bool size_ratio = 3 * tree_size(stripped) >= tree_size(t);
    const bool dominates = dominated(root_vector(stripped), root_vector(t));

    Json checks;
    checks["generators-distinct"] = generators_distinct;
    checks["strip-terminal"] = strip_terminal;
    checks["size-ratio"] = size_ratio;
    checks["domination"] = dominates;
    Json line;
    line["suite"] = "remainders";
    line["instance"] = tree_to_json(t);
    line["checks"] = std::move(checks);
    return std::make_pair(std::move(line),
                          generators_distinct && strip_terminal && size_ratio &&
                              dominates);
  });
  return tally.finish();
}

SweepReport run_small_props(const ReportSink& sink) {
  Tally tally("small-props", sink);
  for (SmallTreeClass c :
       {SmallTreeClass::kSize2, SmallTreeClass::kSize3, SmallTreeClass::kSize4,
        SmallTreeClass::kSize5TwoBranching, SmallTreeClass::kThreeChildrenWith2,
        SmallTreeClass::kThreeChildrenWith3}) {
    for (const SmallTreeResult& r : verify_small_props(c)) {
      Json line;
      line["suite"] = "small-props";
      line["class"] = small_tree_class_name(c);
      line["instance"] = tree_to_json(r.tree);
      line["psi"] = r.psi_value;
      line["bound"] = r.bound;
      line["exact"] = r.exact;
      tally.record(std::move(line), r.pass);
    }
  }
  return tally.finish();
}

SweepReport run_main_lemma(std::size_t max_n, const ReportSink& sink) {
  check_max_n(max_n, 10, "main-lemma");
  Tally tally("main-lemma", sink);
  sweep_trees(4, max_n, tally, [](const ColoredTernaryTree& t) {
    Json line;
    line["suite"] = "main-lemma";
    line["instance"] = tree_to_json(t);
    if (!find_remainders(t).empty()) {
      // Out of scope; counted separately, never as a failure.
      line["skipped"] = true;
      return std::make_pair(std::move(line), true);
    }
    const MainLemmaResult result = verify_main_lemma(t);
    const ChainDecomposition& shown =
        result.found ? *result.witness
                     : *std::max_element(result.attempts.begin(),
                                         result.attempts.end(),
                                         [](const auto& a, const auto& b) {
                                           return a.psi_value < b.psi_value;
                                         });
    line["psi"] = shown.psi_value;
    line["bound"] = shown.psi_floor;
    line["chain_length"] = shown.chain_length;
    line["subtree_size"] = shown.subtree_size;
    return std::make_pair(std::move(line), result.found);
  });
  return tally.finish();
}

struct BoundInstance {
  GrowthHistory history;
  bool random = false;
};

std::vector<BoundInstance> bound_instances(std::size_t max_n) {
  std::vector<BoundInstance> instances;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for_each_history(n, [&](const GrowthHistory& h) {
      instances.push_back(BoundInstance{h, false});
    });
  }
  std::mt19937_64 gen(kRandomBoundSeed);
  for (std::size_t i = 0; i < kRandomBoundInstances; ++i) {
    const std::size_t steps = uniform_below(gen, kRandomBoundMaxSteps + 1);
    instances.push_back(BoundInstance{random_history(steps, gen()), true});
  }
  return instances;
}

// Shared engine for the theorem and corollary sweeps; `dual_sized` switches
// the instance measure from triangulation size to dual size and halves the
// degeneracy into a matching count.
SweepReport run_bound_suite(const std::string& suite, std::size_t max_n,
                            std::size_t allow_below, const ReportSink& sink,
                            bool dual_sized) {
  check_max_n(max_n, 7, suite.c_str());
  const std::array<unsigned, 2> denominators =
      dual_sized ? std::array<unsigned, 2>{72, 144} : std::array<unsigned, 2>{36, 72};

  Tally tally(suite, sink);
  std::map<unsigned, std::map<std::size_t, std::size_t>> violations;

  const std::vector<BoundInstance> instances = bound_instances(max_n);
  std::vector<std::pair<Json, bool>> results(instances.size());
  std::vector<std::array<bool, 2>> holds(instances.size());
  std::vector<std::size_t> sizes(instances.size());
  parallel_chunks(instances.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const BoundInstance& inst = instances[i];
      const StackTriangulation t = StackTriangulation::from_history(inst.history);
      const BigInt d = degeneracy(degeneracy_vector(t));
      Json line;
      line["suite"] = suite;
      line["instance"] = history_to_json(inst.history);
      line["random"] = inst.random;
      std::size_t size;
      BigInt count;
      if (dual_sized) {
        size = 2 * t.vertex_count() - 4;
        count = d / 2;
        line["dual_vertices"] = size;
        line["matchings"] = count.str();
        holds[i] = {corollary_bound_check(size, count, denominators[0]),
                    corollary_bound_check(size, count, denominators[1])};
      } else {
        size = t.vertex_count();
        count = d;
        line["size"] = size;
        line["degeneracy"] = count.str();
        holds[i] = {theorem_bound_check(size, count, denominators[0]),
                    theorem_bound_check(size, count, denominators[1])};
      }
      sizes[i] = size;
      const bool allowed = size < allow_below;
      const bool pass = (holds[i][0] || allowed) && (holds[i][1] || allowed);
      Json verdicts;
      verdicts[std::to_string(denominators[0])] = holds[i][0];
      verdicts[std::to_string(denominators[1])] = holds[i][1];
      line["holds"] = std::move(verdicts);
      line["allowed"] = allowed;
      results[i] = {std::move(line), pass};
    }
  });
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (!holds[i][k]) ++violations[denominators[k]][sizes[i]];
    }
    tally.record(std::move(results[i].first), results[i].second);
  }

  Json variants;
  for (unsigned den : denominators) {
    Json v;
    Json sizes_json = Json::array();
    std::size_t max_violating = 0;
    std::size_t total = 0;
    for (const auto& [size, count] : violations[den]) {
      sizes_json.push_back(size);
      max_violating = std::max(max_violating, size);
      total += count;
    }
    v["violation_sizes"] = std::move(sizes_json);
    v["violation_count"] = total;
    // Smallest size with no violation at or above it; 0 when clean.
    v["threshold_size"] = violations[den].empty() ? 0 : max_violating + 1;
    variants[std::to_string(den)] = std::move(v);
  }
  tally.extra()["variants"] = std::move(variants);
  tally.extra()["allow_below"] = allow_below;
  tally.extra()["random_instances"] = kRandomBoundInstances;
  tally.extra()["random_max_steps"] = kRandomBoundMaxSteps;
  return tally.finish();
}

}  // namespace

Json SweepReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["instance_count"] = instance_count;
  j["pass_count"] = pass_count;
  j["fail_count"] = fail_count;
  j["failures"] = failures;
  if (failures_truncated) j["failures_truncated"] = true;
  j["wall_time_seconds"] = wall_time_seconds;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

std::vector<SweepReport> run_suites(const std::string& name, std::size_t max_n,
                                    std::size_t allow_below, const ReportSink& sink) {
  if (name == "lemma1") return {run_lemma1(max_n, sink)};
  if (name == "prop2") return {run_prop2(max_n, sink)};
  if (name == "remainders") return {run_remainders(max_n, sink)};
  if (name == "small-props") return {run_small_props(sink)};
  if (name == "main-lemma") return {run_main_lemma(max_n, sink)};
  if (name == "theorem") return {run_bound_suite("theorem", max_n, allow_below, sink, false)};
  if (name == "corollary") return {run_bound_suite("corollary", max_n, allow_below, sink, true)};
  if (name == "all") {
    std::vector<SweepReport> reports;
    for (const char* suite : {"lemma1", "prop2", "remainders", "small-props",
                              "main-lemma", "theorem", "corollary"}) {
      auto sub = run_suites(suite, max_n, allow_below, sink);
      reports.insert(reports.end(), std::make_move_iterator(sub.begin()),
                     std::make_move_iterator(sub.end()));
    }
    return reports;
  }
  throw UnknownNameError("unknown suite: " + name);
}

}  // namespace matchstack
