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

#include "errors.hpp"
#include "oracles.hpp"
#include "transfer.hpp"
#include "triangulation.hpp"

using namespace matchstack;

namespace {

CubicMultigraph graph(std::size_t vertices,
                      std::vector<std::pair<std::size_t, std::size_t>> edges) {
  CubicMultigraph g;
  g.vertex_count = vertices;
  g.edges = std::move(edges);
  return g;
}

}  // namespace

TEST_CASE("energy counts frustrated edges") {
  const StackTriangulation t = StackTriangulation::root_triangle();
  // All spins equal: every edge frustrated.
  CHECK(energy(t, 0b111) == 3);
  CHECK(energy(t, 0b000) == 3);
  // One spin flipped: exactly one frustrated edge.
  CHECK(energy(t, 0b001) == -1);
  CHECK(energy(t, 0b010) == -1);
}

TEST_CASE("satisfies_face wants exactly one equal-spin edge") {
  const FaceRecord f{0, 1, 2};
  CHECK(satisfies_face(f, 0b001));
  CHECK(satisfies_face(f, 0b110));
  CHECK_FALSE(satisfies_face(f, 0b111));
  CHECK_FALSE(satisfies_face(f, 0b000));
}

TEST_CASE("class counts for the smallest triangulations") {
  auto vec_of = [](const GrowthHistory& h) {
    return count_satisfying_by_class(StackTriangulation::from_history(h));
  };
  CHECK(vec_of({}) == base_vector());
  CHECK(vec_of({0}) == degeneracy_vector(StackTriangulation::from_history({0})));
  CHECK(vec_of({0, 0}) ==
        degeneracy_vector(StackTriangulation::from_history({0, 0})));
}

TEST_CASE("total satisfying count folds to twice the class sum") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for_each_history(n, [&](const GrowthHistory& h) {
      const StackTriangulation t = StackTriangulation::from_history(h);
      const DegeneracyVector v = count_satisfying_by_class(t);
      CHECK(count_satisfying_total(t) == 2 * (v[0] + v[1] + v[2] + v[3]));
    });
  }
}

TEST_CASE("groundstates equal the degeneracy of the transfer recursion") {
  const long expected[] = {6, 6, 8};
  const GrowthHistory histories[] = {{}, {0}, {0, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    const StackTriangulation t = StackTriangulation::from_history(histories[i]);
    CHECK(count_groundstates(t) == expected[i]);
    CHECK(count_groundstates(t) == degeneracy(degeneracy_vector(t)));
  }
}

TEST_CASE("perfect matchings of reference graphs") {
  // Theta graph: two vertices joined by three parallel edges.
  CHECK(count_perfect_matchings(graph(2, {{0, 1}, {0, 1}, {0, 1}})) == 3);
  // Complete graph on four vertices.
  CHECK(count_perfect_matchings(graph(
            4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
  // Triangular prism.
  CHECK(count_perfect_matchings(graph(6, {{0, 1},
                                          {1, 2},
                                          {0, 2},
                                          {3, 4},
                                          {4, 5},
                                          {3, 5},
                                          {0, 3},
                                          {1, 4},
                                          {2, 5}})) == 4);
  // Four-cycle, a single edge, and an odd order.
  CHECK(count_perfect_matchings(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == 2);
  CHECK(count_perfect_matchings(graph(2, {{0, 1}})) == 1);
  CHECK(count_perfect_matchings(graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 0);
  // Disconnected pieces multiply; an untouched vertex kills every matching.
  CHECK(count_perfect_matchings(graph(4, {{0, 1}, {0, 1}, {2, 3}, {0, 1}})) == 3);
  CHECK(count_perfect_matchings(graph(4, {{0, 1}, {0, 2}, {1, 2}})) == 0);
}

TEST_CASE("dual matchings match intersecting sets and half the degeneracy") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for_each_history(n, [&](const GrowthHistory& h) {
      const StackTriangulation t = StackTriangulation::from_history(h);
      const BigInt matchings = count_perfect_matchings(dual(t));
      CAPTURE(n);
      CHECK(matchings == count_intersecting_sets(t));
      CHECK(2 * matchings == degeneracy(degeneracy_vector(t)));
      CHECK(2 * matchings == count_groundstates(t));
    });
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const StackTriangulation t =
        StackTriangulation::from_history(random_history(8, seed));
    const BigInt matchings = count_perfect_matchings(dual(t));
    CHECK(matchings == count_intersecting_sets(t));
    CHECK(2 * matchings == degeneracy(degeneracy_vector(t)));
  }
}

TEST_CASE("intersecting sets hit every face exactly once") {
  const StackTriangulation t = StackTriangulation::from_history({0, 1, 3});
  std::size_t streamed = 0;
  for_each_intersecting_set(t, [&](const std::vector<std::size_t>& set) {
    ++streamed;
    std::vector<FaceRecord> faces = t.inner_faces();
    faces.push_back(t.outer_face());
    for (const FaceRecord& f : faces) {
      std::size_t hit = 0;
      for (std::size_t index : set) {
        const Edge& e = t.edges()[index];
        const bool on_face = (e == make_edge(f.a, f.b)) ||
                             (e == make_edge(f.b, f.c)) ||
                             (e == make_edge(f.c, f.a));
        if (on_face) ++hit;
      }
      CHECK(hit == 1);
    }
    // Removing an intersecting set leaves the two spin classes of a
    // groundstate pair, i.e. a bipartite graph.
    CHECK(deletion_leaves_bipartite(t, set));
  });
  CHECK(streamed == count_intersecting_sets(t));
}

TEST_CASE("duals of triangulations are bridgeless") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_history(n, [&](const GrowthHistory& h) {
      CHECK(is_bridgeless(dual(StackTriangulation::from_history(h))));
    });
  }
  CHECK_FALSE(is_bridgeless(graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}})));
}

TEST_CASE("brute-force guards refuse oversized instances") {
  const StackTriangulation big =
      StackTriangulation::from_history(random_history(28, 1));
  REQUIRE(big.vertex_count() == 31);
  CHECK_THROWS_AS(count_satisfying_by_class(big), TooLargeError);
  CHECK_THROWS_AS(count_satisfying_total(big), TooLargeError);
  CHECK_THROWS_AS(count_groundstates(big), TooLargeError);

  CubicMultigraph too_many;
  too_many.vertex_count = 42;
  CHECK_THROWS_AS(count_perfect_matchings(too_many), TooLargeError);

  const StackTriangulation wide =
      StackTriangulation::from_history(random_history(15, 2));
  REQUIRE(wide.edges().size() == 48);
  CHECK_THROWS_AS(count_intersecting_sets(wide), TooLargeError);
}
