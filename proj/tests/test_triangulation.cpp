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

#include <map>
#include <set>
#include <vector>

#include "errors.hpp"
#include "triangulation.hpp"

using namespace matchstack;

TEST_CASE("base triangle") {
  const StackTriangulation t = StackTriangulation::root_triangle();
  CHECK(t.vertex_count() == 3);
  CHECK(t.step_count() == 0);
  REQUIRE(t.inner_faces().size() == 1);
  CHECK(t.inner_faces()[0] == FaceRecord{0, 1, 2});
  CHECK(t.outer_face() == FaceRecord{0, 1, 2});
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("one growth step replaces the chosen face by three marked faces") {
  const StackTriangulation t = StackTriangulation::from_history({0});
  CHECK(t.vertex_count() == 4);
  CHECK(t.inner_faces() ==
        std::vector<FaceRecord>{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
  CHECK(t.edges().size() == 6);
}

TEST_CASE("removal keeps untouched records in order") {
  const StackTriangulation t = StackTriangulation::from_history({0, 1});
  CHECK(t.inner_faces() == std::vector<FaceRecord>{{0, 1, 3},
                                                   {2, 0, 3},
                                                   {1, 2, 4},
                                                   {2, 3, 4},
                                                   {3, 1, 4}});
}

TEST_CASE("growth counts") {
  for (std::size_t n : {0u, 1u, 2u, 5u, 9u, 40u}) {
    const StackTriangulation t =
        StackTriangulation::from_history(random_history(n, 17 + n));
    CAPTURE(n);
    CHECK(t.vertex_count() == n + 3);
    CHECK(t.inner_faces().size() == 2 * n + 1);
    CHECK(t.edges().size() == 3 * t.vertex_count() - 6);
    CHECK(t.step_count() == n);
  }
}

TEST_CASE("face origins track creator and position") {
  const StackTriangulation t = StackTriangulation::from_history({0, 2});
  // Step 2 grew into the face created by step 1 at position 3.
  REQUIRE(t.step_origins().size() == 2);
  CHECK(t.step_origins()[0] == FaceOrigin{0, 0});
  CHECK(t.step_origins()[1] == FaceOrigin{1, 3});
  for (const FaceOrigin& o : t.face_origins()) {
    const bool fresh = o.creator == 2;
    const bool leftover = o.creator == 1;
    CHECK((fresh || leftover));
  }
}

TEST_CASE("out-of-range choice throws") {
  CHECK_THROWS_AS(StackTriangulation::from_history({1}), IndexError);
  CHECK_THROWS_AS(StackTriangulation::from_history({0, 3}), IndexError);
  CHECK_NOTHROW(StackTriangulation::from_history({0, 2, 4}));
}

TEST_CASE("history counts are the double factorials") {
  const long expected[] = {1, 1, 3, 15, 105, 945, 10395};
  for (std::size_t n = 0; n < 7; ++n) {
    CHECK(history_count(n) == expected[n]);
  }
}

TEST_CASE("enumerator emits every history once, lexicographically") {
  std::vector<GrowthHistory> all;
  for_each_history(3, [&](const GrowthHistory& h) { all.push_back(h); });
  REQUIRE(all.size() == 15);
  CHECK(all.front() == GrowthHistory{0, 0, 0});
  CHECK(all.back() == GrowthHistory{0, 2, 4});
  std::set<GrowthHistory> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);

  std::size_t count4 = 0;
  for_each_history(4, [&](const GrowthHistory&) { ++count4; });
  CHECK(count4 == 105);
}

TEST_CASE("random histories are valid and reproducible") {
  for (std::uint64_t seed : {0ull, 1ull, 424242ull}) {
    const GrowthHistory h = random_history(25, seed);
    REQUIRE(h.size() == 25);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] < 2 * i + 1);
    CHECK(h == random_history(25, seed));
  }
}

TEST_CASE("uniform_below covers its range") {
  std::mt19937_64 gen(5);
  std::map<std::size_t, std::size_t> seen;
  for (int i = 0; i < 300; ++i) ++seen[uniform_below(gen, 5)];
  REQUIRE(seen.size() == 5);
  for (const auto& [value, count] : seen) {
    CHECK(value < 5);
    CHECK(count > 0);
  }
}

TEST_CASE("dual of the base triangle is the theta graph") {
  const CubicMultigraph g = dual(StackTriangulation::root_triangle());
  CHECK(g.vertex_count == 2);
  CHECK(g.edges ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 1}, {0, 1}});
  CHECK(g.face_of == std::vector<FaceRecord>{{0, 1, 2}, {0, 1, 2}});
}

TEST_CASE("dual of one growth step is the complete graph on four vertices") {
  const CubicMultigraph g = dual(StackTriangulation::from_history({0}));
  REQUIRE(g.vertex_count == 4);
  REQUIRE(g.edges.size() == 6);
  std::set<std::pair<std::size_t, std::size_t>> distinct(g.edges.begin(),
                                                         g.edges.end());
  CHECK(distinct.size() == 6);  // no parallel edges: every pair appears once
}

TEST_CASE("dual is always cubic with one vertex per face") {
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 15u}) {
    const StackTriangulation t =
        StackTriangulation::from_history(random_history(n, 91 + n));
    const CubicMultigraph g = dual(t);
    CAPTURE(n);
    CHECK(g.vertex_count == t.inner_faces().size() + 1);
    CHECK(g.vertex_count == 2 * t.vertex_count() - 4);
    CHECK(g.edges.size() == t.edges().size());
    std::vector<std::size_t> degree(g.vertex_count, 0);
    for (const auto& [u, v] : g.edges) {
      ++degree[u];
      ++degree[v];
    }
    for (std::size_t d : degree) CHECK(d == 3);
    // Outer face sits at the last dual vertex.
    CHECK(g.face_of.back() == t.outer_face());
  }
}
