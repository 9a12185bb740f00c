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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "bijection.hpp"
#include "transfer.hpp"

namespace matchstack {

// Per-class golden-ratio exponents certified by a degeneracy vector.
struct ExponentVector {
  std::array<long, 4> e{};

  long& operator[](std::size_t i) { return e[i]; }
  long operator[](std::size_t i) const { return e[i]; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// psi = 2 * (e1 + e2 + e3); the groundstate-relevant coordinates, doubled to
// account for the global spin flip.
long psi(const ExponentVector& e);

// psi minus the number of coordinates in {1,2,3} exceeding e0.  Monotone
// under chain extension, which is what the chain decomposition leans on.
long phi_functional(const ExponentVector& e);

/*
 * Powers of the golden ratio never touch floating point: phi^e is carried as
 * the pair (lucas, fibonacci) with phi^e = (lucas + fibonacci * sqrt(5)) / 2,
 * advanced by (l, f) -> ((l + 5f) / 2, (l + f) / 2) from (2, 0).  The pair
 * satisfies l^2 - 5 f^2 = 4 * (-1)^e.
 */
struct GoldenPower {
  BigInt lucas;
  BigInt fibonacci;
};

GoldenPower golden_power(std::size_t exponent);

// Decides phi^exponent <= x exactly: with (l, f) = golden_power(exponent),
// true iff 2x - l >= 0 and (2x - l)^2 >= 5 f^2.
bool golden_power_leq(std::size_t exponent, const BigInt& x);

// Componentwise largest exponents: e_s = max { k : phi^k <= v_s }.  Throws
// PreconditionError when some coordinate is 0 (no exponent exists).
ExponentVector max_exponent_vector(const DegeneracyVector& v);

/*
 * Remainders are the prunable fringes of a tree.  With v a leaf and w its
 * father:
 *   - {v} is a remainder with generator w if w has another child and every
 *     other child u of w satisfies |T_u| >= 3;
 *   - {v, w} is a remainder with generator y if v is w's only child, y is
 *     w's father, and y has exactly two children w, u with |T_u| >= 3.
 * Vertices are named by preorder index (root = 0, children label-ascending).
 */
struct Remainder {
  std::vector<std::size_t> vertices;
  std::size_t generator = 0;

  friend bool operator==(const Remainder&, const Remainder&) = default;
};

struct RemainderReport {
  std::vector<Remainder> remainders;

  bool empty() const { return remainders.empty(); }
};

RemainderReport find_remainders(const ColoredTernaryTree& t);

// Tree with every remainder vertex removed.  One pass suffices: the result
// carries no remainders of its own (checked exhaustively in the test suite).
ColoredTernaryTree strip_remainders(const ColoredTernaryTree& t);

// Shape classes with proven psi floors.
enum class SmallTreeClass {
  kSize2,               // psi == 2
  kSize3,               // psi == 4
  kSize4,               // psi >= 6
  kSize5TwoBranching,   // two children, neither a leaf: psi >= 8
  kThreeChildrenWith2,  // three children of size <= 3, one of size 2: psi >= 8
  kThreeChildrenWith3,  // three children of size <= 3, one of size 3: psi >= 10
};

const char* small_tree_class_name(SmallTreeClass c);

struct SmallTreeResult {
  ColoredTernaryTree tree;
  long psi_value = 0;
  long bound = 0;
  bool exact = false;  // class asserts equality, not just >=
  bool pass = false;
};

// Exhaustive check of one shape class.
std::vector<SmallTreeResult> verify_small_props(SmallTreeClass c);

/*
 * For a remainder-free tree of size >= 4 there is a node v~ on the initial
 * unique-child chain, at distance at most 5 from the root, whose subtree
 * certifies psi >= (|subtree| + 7) / 2.  verify_main_lemma walks those
 * candidates in distance order and returns the first witness.
 */
struct ChainDecomposition {
  std::size_t chain_length = 0;  // distance from the root to v~
  std::size_t subtree_size = 0;
  ExponentVector exponents;
  long psi_value = 0;
  long psi_floor = 0;  // ceil((subtree_size + 7) / 2)
};

struct MainLemmaResult {
  bool found = false;
  std::optional<ChainDecomposition> witness;
  // Candidates tried in distance order; ends with the witness when found.
  std::vector<ChainDecomposition> attempts;
};

// Throws PreconditionError when the tree has a remainder or fewer than 4
// nodes.
MainLemmaResult verify_main_lemma(const ColoredTernaryTree& t);

// Exact verdict for degeneracy >= 6 * phi^((size + 3) / denominator); the
// published bound uses denominator 36.  Never asserts: violations are data.
bool theorem_bound_check(std::size_t triangulation_size, const BigInt& degeneracy,
                         unsigned denominator = 36);

// Exact verdict for matchings >= 3 * phi^(dual_size / denominator); the
// published bound uses denominator 72.
bool corollary_bound_check(std::size_t dual_size, const BigInt& matchings,
                           unsigned denominator = 72);

}  // namespace matchstack
