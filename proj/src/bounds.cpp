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

#include "bounds.hpp"

#include <algorithm>

#include "errors.hpp"

namespace matchstack {

long psi(const ExponentVector& e) { return 2 * (e[1] + e[2] + e[3]); }

long phi_functional(const ExponentVector& e) {
  long above = 0;
  for (std::size_t s = 1; s <= 3; ++s) {
    if (e[s] > e[0]) ++above;
  }
  return psi(e) - above;
}

GoldenPower golden_power(std::size_t exponent) {
  GoldenPower p{2, 0};
  for (std::size_t i = 0; i < exponent; ++i) {
    BigInt l = (p.lucas + 5 * p.fibonacci) / 2;
    BigInt f = (p.lucas + p.fibonacci) / 2;
    p.lucas = std::move(l);
    p.fibonacci = std::move(f);
  }
  return p;
}

namespace {

bool golden_pair_leq(const GoldenPower& p, const BigInt& x) {
  const BigInt t = 2 * x - p.lucas;
  return t >= 0 && t * t >= 5 * p.fibonacci * p.fibonacci;
}

}  // namespace

bool golden_power_leq(std::size_t exponent, const BigInt& x) {
  return golden_pair_leq(golden_power(exponent), x);
}

ExponentVector max_exponent_vector(const DegeneracyVector& v) {
  ExponentVector e;
  for (std::size_t s = 0; s < 4; ++s) {
    if (v[s] == 0) {
      throw PreconditionError(
          "exponent undefined: coordinate " + std::to_string(s) + " is zero");
    }
    // v >= 1 = phi^0, so walk upward until phi^(k+1) exceeds v.
    GoldenPower p{2, 0};
    long k = 0;
    for (;;) {
      GoldenPower q{(p.lucas + 5 * p.fibonacci) / 2, (p.lucas + p.fibonacci) / 2};
      if (!golden_pair_leq(q, v[s])) break;
      p = std::move(q);
      ++k;
    }
    e[s] = k;
  }
  return e;
}

namespace {

// Flat preorder view used by the remainder and chain analyses.
struct FlatTree {
  struct Node {
    int label = 0;
    std::size_t parent = 0;  // self-parent marks the root
    std::vector<std::size_t> children;
    std::size_t subtree_size = 1;
  };
  std::vector<Node> nodes;
};

std::size_t flatten_into(FlatTree& flat, const TreeNode& node, std::size_t parent) {
  const std::size_t id = flat.nodes.size();
  flat.nodes.push_back(FlatTree::Node{node.label, parent, {}, 1});
  for (const TreeNode& c : node.children) {
    const std::size_t child = flatten_into(flat, c, id);
    flat.nodes[id].children.push_back(child);
    flat.nodes[id].subtree_size += flat.nodes[child].subtree_size;
  }
  return id;
}

FlatTree flatten(const ColoredTernaryTree& t) {
  FlatTree flat;
  flatten_into(flat, t.root, 0);
  return flat;
}

}  // namespace

RemainderReport find_remainders(const ColoredTernaryTree& t) {
  const FlatTree flat = flatten(t);
  RemainderReport report;
  for (std::size_t v = 1; v < flat.nodes.size(); ++v) {
    if (!flat.nodes[v].children.empty()) continue;
    const std::size_t w = flat.nodes[v].parent;
    const auto& siblings = flat.nodes[w].children;
    if (siblings.size() >= 2) {
      const bool all_large = std::all_of(
          siblings.begin(), siblings.end(), [&](std::size_t u) {
            return u == v || flat.nodes[u].subtree_size >= 3;
          });
      if (all_large) report.remainders.push_back(Remainder{{v}, w});
      continue;
    }
    // v is w's only child; {v, w} qualifies when w's father has exactly the
    // two children w, u with |T_u| >= 3.
    if (w == 0) continue;
    const std::size_t y = flat.nodes[w].parent;
    const auto& uncles = flat.nodes[y].children;
    if (uncles.size() != 2) continue;
    const std::size_t u = uncles[0] == w ? uncles[1] : uncles[0];
    if (flat.nodes[u].subtree_size >= 3) {
      report.remainders.push_back(Remainder{{v, w}, y});
    }
  }
  return report;
}

namespace {

TreeNode rebuild_without(const FlatTree& flat, std::size_t id,
                         const std::vector<bool>& removed) {
  TreeNode node;
  node.label = flat.nodes[id].label;
  for (std::size_t c : flat.nodes[id].children) {
    if (!removed[c]) node.children.push_back(rebuild_without(flat, c, removed));
  }
  return node;
}

}  // namespace

ColoredTernaryTree strip_remainders(const ColoredTernaryTree& t) {
  const RemainderReport report = find_remainders(t);
  if (report.empty()) return t;
  const FlatTree flat = flatten(t);
  std::vector<bool> removed(flat.nodes.size(), false);
  for (const Remainder& r : report.remainders) {
    for (std::size_t v : r.vertices) removed[v] = true;
  }
  return ColoredTernaryTree{rebuild_without(flat, 0, removed)};
}

const char* small_tree_class_name(SmallTreeClass c) {
  switch (c) {
    case SmallTreeClass::kSize2:
      return "size2";
    case SmallTreeClass::kSize3:
      return "size3";
    case SmallTreeClass::kSize4:
      return "size4";
    case SmallTreeClass::kSize5TwoBranching:
      return "size5-two-branching";
    case SmallTreeClass::kThreeChildrenWith2:
      return "three-children-with-size2";
    case SmallTreeClass::kThreeChildrenWith3:
      return "three-children-with-size3";
  }
  return "?";
}

namespace {

SmallTreeResult check_psi_floor(const ColoredTernaryTree& t, long bound, bool exact) {
  SmallTreeResult r;
  r.tree = t;
  r.bound = bound;
  r.exact = exact;
  r.psi_value = psi(max_exponent_vector(root_vector(t)));
  r.pass = exact ? r.psi_value == bound : r.psi_value >= bound;
  return r;
}

// All trees whose root has three children with subtree sizes <= 3, at least
// one subtree of size `pinned`.
std::vector<ColoredTernaryTree> three_small_children_class(std::size_t pinned) {
  std::vector<std::vector<ColoredTernaryTree>> by_size(4);
  for (std::size_t s = 1; s <= 3; ++s) by_size[s] = enumerate_trees(s);
  std::vector<ColoredTernaryTree> out;
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      for (std::size_t c = 1; c <= 3; ++c) {
        if (a != pinned && b != pinned && c != pinned) continue;
        for (const auto& ta : by_size[a]) {
          for (const auto& tb : by_size[b]) {
            for (const auto& tc : by_size[c]) {
              TreeNode root;
              root.children = {ta.root, tb.root, tc.root};
              root.children[0].label = 1;
              root.children[1].label = 2;
              root.children[2].label = 3;
              out.push_back(ColoredTernaryTree{root});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SmallTreeResult> verify_small_props(SmallTreeClass c) {
  std::vector<SmallTreeResult> results;
  auto run_all_of_size = [&](std::size_t size, long bound, bool exact) {
    for_each_tree(size, [&](const ColoredTernaryTree& t) {
      results.push_back(check_psi_floor(t, bound, exact));
    });
  };
  switch (c) {
    case SmallTreeClass::kSize2:
      run_all_of_size(2, 2, true);
      break;
    case SmallTreeClass::kSize3:
      run_all_of_size(3, 4, true);
      break;
    case SmallTreeClass::kSize4:
      run_all_of_size(4, 6, false);
      break;
    case SmallTreeClass::kSize5TwoBranching:
      for_each_tree(5, [&](const ColoredTernaryTree& t) {
        if (t.root.children.size() != 2) return;
        if (t.root.children[0].children.empty()) return;
        if (t.root.children[1].children.empty()) return;
        results.push_back(check_psi_floor(t, 8, false));
      });
      break;
    case SmallTreeClass::kThreeChildrenWith2:
      for (const auto& t : three_small_children_class(2)) {
        results.push_back(check_psi_floor(t, 8, false));
      }
      break;
    case SmallTreeClass::kThreeChildrenWith3:
      for (const auto& t : three_small_children_class(3)) {
        results.push_back(check_psi_floor(t, 10, false));
      }
      break;
  }
  return results;
}

MainLemmaResult verify_main_lemma(const ColoredTernaryTree& t) {
  const RemainderReport remainders = find_remainders(t);
  if (!remainders.empty()) {
    throw PreconditionError("tree has a remainder (generator preorder id " +
                            std::to_string(remainders.remainders[0].generator) +
                            "); chain decomposition needs a remainder-free tree");
  }
  const std::size_t size = tree_size(t);
  if (size < 4) {
    throw PreconditionError("chain decomposition needs at least 4 nodes");
  }

  MainLemmaResult result;
  const TreeNode* candidate = &t.root;
  std::size_t distance = 0;
  std::size_t candidate_size = size;
  for (;;) {
    ChainDecomposition attempt;
    attempt.chain_length = distance;
    attempt.subtree_size = candidate_size;
    attempt.exponents = max_exponent_vector(root_vector(*candidate));
    attempt.psi_value = psi(attempt.exponents);
    attempt.psi_floor = static_cast<long>((candidate_size + 7 + 1) / 2);
    const bool ok = 2 * attempt.psi_value >= static_cast<long>(candidate_size) + 7;
    result.attempts.push_back(attempt);
    if (ok && !result.found) {
      result.found = true;
      result.witness = attempt;
      break;
    }
    if (distance == 5 || candidate->children.size() != 1) break;
    candidate = &candidate->children[0];
    candidate_size -= 1;
    ++distance;
  }
  return result;
}

namespace {

// count >= coefficient * phi^(numerator / denominator), decided by raising
// both sides to the denominator-th power: with (l, f) = golden_power(num),
// the predicate becomes 2 * count^den - coefficient^den * l >= 0 and its
// square at least 5 * (coefficient^den * f)^2.
bool scaled_bound_holds(const BigInt& count, unsigned coefficient,
                        std::size_t numerator, unsigned denominator) {
  if (denominator == 0) {
    throw PreconditionError("exponent denominator must be positive");
  }
  if (count < 0) {
    throw PreconditionError("count must be nonnegative");
  }
  const BigInt count_pow = boost::multiprecision::pow(count, denominator);
  const BigInt coeff_pow = boost::multiprecision::pow(BigInt(coefficient), denominator);
  const GoldenPower p = golden_power(numerator);
  const BigInt t = 2 * count_pow - coeff_pow * p.lucas;
  const BigInt scaled_f = coeff_pow * p.fibonacci;
  return t >= 0 && t * t >= 5 * scaled_f * scaled_f;
}

}  // namespace

bool theorem_bound_check(std::size_t triangulation_size, const BigInt& degeneracy,
                         unsigned denominator) {
  return scaled_bound_holds(degeneracy, 6, triangulation_size + 3, denominator);
}

bool corollary_bound_check(std::size_t dual_size, const BigInt& matchings,
                           unsigned denominator) {
  return scaled_bound_holds(matchings, 3, dual_size, denominator);
}

}  // namespace matchstack
