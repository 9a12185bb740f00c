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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bigint.hpp"

namespace matchstack {

using VertexId = std::uint32_t;

/*
 * A rooted stack triangulation is grown from the base triangle (vertices
 * 0, 1, 2 counterclockwise, root edge 0 -> 1) by repeatedly picking an inner
 * face and joining a fresh vertex to its three corners.  A FaceRecord keeps
 * the corners in counterclockwise order with the marked edge first:
 * face (a, b, c) carries mark a -> b.
 *
 * Growing into face (a, b, c) removes that record from the inner-face list
 * and appends, in this order,
 *     (a, b, u)  marked a -> b
 *     (b, c, u)  marked b -> c
 *     (c, a, u)  marked c -> a
 * where u is the new vertex.  All other records are untouched, so a growth
 * history (the sequence of chosen list indices) replays deterministically.
 */
struct FaceRecord {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

// Undirected edge, normalized so u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

Edge make_edge(VertexId x, VertexId y);

// Step i of a history picks index history[i] of the inner-face list at that
// moment; the list has 2i+1 entries, so history[i] < 2i+1.
using GrowthHistory = std::vector<std::size_t>;

// Where an inner face came from: the face appended in `position` (1..3) by
// growth step `creator` (1-based), or the base triangle ({0, 0}).
struct FaceOrigin {
  std::size_t creator = 0;
  int position = 0;

  friend bool operator==(const FaceOrigin&, const FaceOrigin&) = default;
};

class StackTriangulation {
 public:
  // The base triangle: 3 vertices, one inner face, no growth steps.
  static StackTriangulation root_triangle();

  // Replays a whole history.  Throws IndexError on an out-of-range choice.
  static StackTriangulation from_history(const GrowthHistory& history);

  // Value after one growth step into inner_faces()[face_index].
  StackTriangulation grown(std::size_t face_index) const;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t step_count() const { return history_.size(); }
  const std::vector<FaceRecord>& inner_faces() const { return inner_faces_; }
  FaceRecord outer_face() const { return FaceRecord{0, 1, 2}; }
  const std::vector<Edge>& edges() const { return edges_; }
  const GrowthHistory& history() const { return history_; }

  // Origins of the current inner faces (aligned with inner_faces()) and of
  // the face each step grew into (aligned with history()).
  const std::vector<FaceOrigin>& face_origins() const { return face_origins_; }
  const std::vector<FaceOrigin>& step_origins() const { return step_origins_; }

 private:
  StackTriangulation() = default;

  std::size_t vertex_count_ = 0;
  std::vector<FaceRecord> inner_faces_;
  std::vector<FaceOrigin> face_origins_;
  std::vector<FaceOrigin> step_origins_;
  std::vector<Edge> edges_;
  GrowthHistory history_;
};

// Geometric dual restricted to what the engine needs: one vertex per face
// (inner faces first in list order, the outer face last), one edge per primal
// edge in primal creation order.  Cubic; parallel edges are kept distinct.
struct CubicMultigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<FaceRecord> face_of;  // dual vertex -> primal face
};

CubicMultigraph dual(const StackTriangulation& t);

// Number of histories of the given length: (2n-1)!! = prod_{i<n} (2i+1).
BigInt history_count(std::size_t length);

// Streams all histories of the given length in lexicographic order.
class HistoryEnumerator {
 public:
  explicit HistoryEnumerator(std::size_t length);

  // Returns the next history, or nullptr when exhausted.  The pointee is
  // invalidated by the following call.
  const GrowthHistory* next();

 private:
  GrowthHistory current_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_history(std::size_t length,
                      const std::function<void(const GrowthHistory&)>& fn);

// Deterministic: the same (length, seed) always yields the same history,
// uniform over all histories of that length.
GrowthHistory random_history(std::size_t length, std::uint64_t seed);

// Unbiased draw from [0, bound); rejection sampling keeps the result
// reproducible across platforms.
std::size_t uniform_below(std::mt19937_64& gen, std::size_t bound);

}  // namespace matchstack
