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

#include "bijection.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "errors.hpp"

namespace matchstack {

bool operator==(const TreeNode& x, const TreeNode& y) {
  if (x.label != y.label || x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

std::size_t tree_size(const TreeNode& node) {
  std::size_t n = 1;
  for (const TreeNode& c : node.children) n += tree_size(c);
  return n;
}

namespace {

void validate_node(const TreeNode& node, bool is_root) {
  if (is_root) {
    if (node.label != 0) throw InvalidTreeError("root must not carry a label");
  } else if (node.label < 1 || node.label > 3) {
    throw InvalidTreeError("child label " + std::to_string(node.label) +
                           " outside {1,2,3}");
  }
  int previous = 0;
  for (const TreeNode& c : node.children) {
    if (c.label <= previous) {
      throw InvalidTreeError(
          "children must carry distinct labels in ascending order");
    }
    previous = c.label;
    validate_node(c, false);
  }
}

}  // namespace

void validate_tree(const ColoredTernaryTree& t) { validate_node(t.root, true); }

ColoredTernaryTree to_tree(const StackTriangulation& t) {
  const std::size_t n = t.step_count();
  if (n == 0) {
    throw PreconditionError("the base triangle has no inserted vertices");
  }
  // step_origins()[i] names the face filled by step i+1; origin {0, 0} is the
  // base face, so step 1 becomes the root and every later step attaches to
  // the creator of the face it filled.
  std::vector<std::array<std::size_t, 4>> child_of(n + 1, {0, 0, 0, 0});
  for (std::size_t i = 1; i <= n; ++i) {
    const FaceOrigin origin = t.step_origins()[i - 1];
    if (i == 1) continue;  // fills the base face by construction
    child_of[origin.creator][static_cast<std::size_t>(origin.position)] = i;
  }

  std::function<TreeNode(std::size_t)> build = [&](std::size_t step) {
    TreeNode node;
    for (int label = 1; label <= 3; ++label) {
      const std::size_t child = child_of[step][static_cast<std::size_t>(label)];
      if (child != 0) {
        TreeNode sub = build(child);
        sub.label = label;
        node.children.push_back(std::move(sub));
      }
    }
    return node;
  };
  return ColoredTernaryTree{build(1)};
}

GrowthHistory canonical_history(const ColoredTernaryTree& t) {
  validate_tree(t);
  // Simulated inner-face list holding (owner node, position) keys; owner 0 is
  // the base face.  Depth-first, label-ascending insertion: each node fills
  // the face its parent created for its label.
  std::vector<std::pair<const TreeNode*, int>> faces = {{nullptr, 0}};
  GrowthHistory history;
  history.reserve(tree_size(t));

  std::function<void(const TreeNode*, const TreeNode*, int)> insert =
      [&](const TreeNode* node, const TreeNode* parent, int label) {
        const auto wanted = std::make_pair(parent, label);
        const auto it = std::find(faces.begin(), faces.end(), wanted);
        const std::size_t index = static_cast<std::size_t>(it - faces.begin());
        history.push_back(index);
        faces.erase(it);
        faces.emplace_back(node, 1);
        faces.emplace_back(node, 2);
        faces.emplace_back(node, 3);
        for (const TreeNode& c : node->children) insert(&c, node, c.label);
      };
  insert(&t.root, nullptr, 0);
  return history;
}

StackTriangulation from_tree(const ColoredTernaryTree& t) {
  return StackTriangulation::from_history(canonical_history(t));
}

namespace {

// Enumerates every node shape of the given size, assembling children from
// label subsets (ascending) and ordered compositions of the remaining size.
void gen_nodes(std::size_t size, const std::function<void(TreeNode&)>& emit);

void gen_forest(const std::vector<int>& labels, const std::vector<std::size_t>& sizes,
                std::size_t at, std::vector<TreeNode>& acc,
                const std::function<void(std::vector<TreeNode>&)>& emit) {
  if (at == labels.size()) {
    emit(acc);
    return;
  }
  gen_nodes(sizes[at], [&](TreeNode& child) {
    child.label = labels[at];
    acc.push_back(child);
    gen_forest(labels, sizes, at + 1, acc, emit);
    acc.pop_back();
  });
}

void gen_compositions(std::size_t total, std::size_t parts,
                      std::vector<std::size_t>& acc,
                      const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (parts == 1) {
    acc.push_back(total);
    emit(acc);
    acc.pop_back();
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    acc.push_back(first);
    gen_compositions(total - first, parts - 1, acc, emit);
    acc.pop_back();
  }
}

void gen_nodes(std::size_t size, const std::function<void(TreeNode&)>& emit) {
  if (size == 1) {
    TreeNode leaf;
    emit(leaf);
    return;
  }
  for (unsigned mask = 1; mask <= 7; ++mask) {
    std::vector<int> labels;
    for (int l = 1; l <= 3; ++l) {
      if (mask & (1u << (l - 1))) labels.push_back(l);
    }
    if (labels.size() > size - 1) continue;
    std::vector<std::size_t> sizes;
    gen_compositions(size - 1, labels.size(), sizes,
                     [&](const std::vector<std::size_t>& parts) {
                       std::vector<TreeNode> acc;
                       gen_forest(labels, parts, 0, acc, [&](std::vector<TreeNode>& forest) {
                         TreeNode node;
                         node.children = forest;
                         emit(node);
                       });
                     });
  }
}

}  // namespace

void for_each_tree(std::size_t size,
                   const std::function<void(const ColoredTernaryTree&)>& fn) {
  if (size == 0) return;
  gen_nodes(size, [&](TreeNode& root) {
    ColoredTernaryTree t{root};
    fn(t);
  });
}

std::vector<ColoredTernaryTree> enumerate_trees(std::size_t size) {
  std::vector<ColoredTernaryTree> out;
  for_each_tree(size, [&](const ColoredTernaryTree& t) { out.push_back(t); });
  return out;
}

BigInt tree_count(std::size_t size) {
  if (size == 0) return 0;
  // binom(3n, n) / (2n + 1)
  BigInt num = 1;
  for (std::size_t i = 0; i < size; ++i) {
    num *= 3 * size - i;
    num /= i + 1;
  }
  return num / (2 * size + 1);
}

}  // namespace matchstack
