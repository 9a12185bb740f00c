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

#include <cstdint>
#include <functional>
#include <vector>

#include "bigint.hpp"
#include "transfer.hpp"
#include "triangulation.hpp"

namespace matchstack {

/*
 * Brute-force ground truth for the antiferromagnetic Ising model on a
 * triangulation: every edge couples with -1, so an edge joining equal spins
 * is frustrated.  These enumerations are deliberately naive and guarded;
 * they exist to certify the fast paths, not to scale.
 */

// Bit v set = spin +1 at vertex v.
using SpinState = std::uint64_t;

// Sum over edges of +1 when frustrated (equal spins), -1 otherwise.
long energy(const StackTriangulation& t, SpinState state);

// A state satisfies a face when exactly one boundary edge joins equal spins.
bool satisfies_inner_faces(const StackTriangulation& t, SpinState state);
bool satisfies_face(const FaceRecord& f, SpinState state);

// Counts states satisfying every inner face, bucketed by the spins of
// (v0, v1, v2) with the global flip folded away by fixing spin(v0) = +1.
// Bucket order matches DegeneracyVector.  Guard: at most 30 vertices.
DegeneracyVector count_satisfying_by_class(const StackTriangulation& t);

// Total over all 2^n states (no folding); equals twice the coordinate sum of
// count_satisfying_by_class.  Guard: at most 30 vertices.
BigInt count_satisfying_total(const StackTriangulation& t);

// Number of states of minimal energy.  Also recomputes the set of states
// satisfying every face including the outer one and throws on disagreement,
// since the two characterizations must coincide.  Guard: at most 30 vertices.
BigInt count_groundstates(const StackTriangulation& t);

// Perfect matchings of a multigraph; parallel edges count separately.
// Branches on the lowest remaining vertex with memoization on the remaining
// vertex set.  Guard: at most 40 vertices.
BigInt count_perfect_matchings(const CubicMultigraph& g);

// Edge sets meeting every face (inner and outer) exactly once, counted by
// face-ordered backtracking.  Equals the perfect matchings of the dual.
// Guard: at most 45 edges.
BigInt count_intersecting_sets(const StackTriangulation& t);

// Streams each intersecting set as a vector of edge indices into t.edges().
void for_each_intersecting_set(
    const StackTriangulation& t,
    const std::function<void(const std::vector<std::size_t>&)>& fn);

// True when the graph remains connected after deleting each single edge.
bool is_bridgeless(const CubicMultigraph& g);

// True when deleting the given edges (indices into t.edges()) leaves a
// bipartite graph.
bool deletion_leaves_bipartite(const StackTriangulation& t,
                               const std::vector<std::size_t>& edge_indices);

}  // namespace matchstack
