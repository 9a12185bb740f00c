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
#include <functional>
#include <vector>

#include "bigint.hpp"
#include "triangulation.hpp"

namespace matchstack {

/*
 * A grown triangulation corresponds to a rooted ternary tree whose nodes are
 * the inserted vertices: the vertex of step i is a child of the vertex of
 * step j with label k exactly when step i filled the k-th face created by
 * step j.  Step 1 (which fills the base face) is the root.  Children are
 * stored in ascending label order; sibling labels are distinct, drawn from
 * {1, 2, 3}.  The root's label is 0 (serialized as null).
 */
struct TreeNode {
  int label = 0;
  std::vector<TreeNode> children;
};

bool operator==(const TreeNode& x, const TreeNode& y);
inline bool operator!=(const TreeNode& x, const TreeNode& y) { return !(x == y); }

struct ColoredTernaryTree {
  TreeNode root;

  friend bool operator==(const ColoredTernaryTree& x, const ColoredTernaryTree& y) {
    return x.root == y.root;
  }
};

std::size_t tree_size(const TreeNode& node);
inline std::size_t tree_size(const ColoredTernaryTree& t) { return tree_size(t.root); }

// Throws InvalidTreeError if labels leave {1,2,3}, siblings collide, or the
// root carries a label.
void validate_tree(const ColoredTernaryTree& t);

// Tree of a grown triangulation.  Throws PreconditionError for the base
// triangle (no inserted vertices, no tree).
ColoredTernaryTree to_tree(const StackTriangulation& t);

// History that rebuilds the tree by depth-first, label-ascending insertion.
// to_tree(from_history(canonical_history(T))) == T.
GrowthHistory canonical_history(const ColoredTernaryTree& t);

StackTriangulation from_tree(const ColoredTernaryTree& t);

// All colored ternary trees with exactly `size` nodes, in a fixed
// deterministic order.  Their number is binom(3n, n) / (2n + 1).
void for_each_tree(std::size_t size,
                   const std::function<void(const ColoredTernaryTree&)>& fn);
std::vector<ColoredTernaryTree> enumerate_trees(std::size_t size);
BigInt tree_count(std::size_t size);

}  // namespace matchstack
