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

#include <array>

#include "bigint.hpp"
#include "bijection.hpp"
#include "triangulation.hpp"

namespace matchstack {

/*
 * Spin states are grouped by the spins of the three outer vertices
 * (v0, v1, v2); a global flip identifies opposite classes, so four classes
 * remain and are indexed in the fixed order
 *     0: + + +     1: + + -     2: + - +     3: - + +
 * Coordinate s of a DegeneracyVector counts the spin states in class s that
 * satisfy every inner face (exactly one boundary edge joining equal spins).
 * Class 0 joins equal spins on all three outer edges, so the groundstate
 * degeneracy is 2 * (v1 + v2 + v3).
 */
struct DegeneracyVector {
  std::array<BigInt, 4> v{};

  BigInt& operator[](std::size_t i) { return v[i]; }
  const BigInt& operator[](std::size_t i) const { return v[i]; }

  friend bool operator==(const DegeneracyVector&, const DegeneracyVector&) = default;
};

// Vector of the bare base triangle: (0, 1, 1, 1).
DegeneracyVector base_vector();

// Vector of a triangulation assembled from the vectors of the three
// sub-triangulations hanging off its first inserted vertex, in position
// order.  A position nobody grew into contributes base_vector().
DegeneracyVector combine_children(const DegeneracyVector& v1,
                                  const DegeneracyVector& v2,
                                  const DegeneracyVector& v3);

// Bottom-up evaluation over the tree: a leaf maps to (1, 1, 1, 1) and a node
// merges its children according to their label pattern (one fixed linear form
// per pattern).  Yields the degeneracy vector of the matching triangulation.
DegeneracyVector root_vector(const TreeNode& node);
DegeneracyVector root_vector(const ColoredTernaryTree& t);

// base_vector() for the base triangle, root_vector(to_tree(t)) otherwise.
DegeneracyVector degeneracy_vector(const StackTriangulation& t);

// Same value computed without tree types: recursive combine_children over the
// parent/position structure of the growth history.  Kept as an independent
// evaluation path for testing.
DegeneracyVector degeneracy_vector_recursive(const StackTriangulation& t);

// Groundstate count: 2 * (v1 + v2 + v3).
BigInt degeneracy(const DegeneracyVector& v);

}  // namespace matchstack
