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

#include "transfer.hpp"

#include <functional>

#include "errors.hpp"

namespace matchstack {

DegeneracyVector base_vector() {
  DegeneracyVector d;
  d.v = {BigInt(0), BigInt(1), BigInt(1), BigInt(1)};
  return d;
}

DegeneracyVector combine_children(const DegeneracyVector& v1,
                                  const DegeneracyVector& v2,
                                  const DegeneracyVector& v3) {
  DegeneracyVector r;
  r[0] = v1[0] * v2[0] * v3[0] + v1[1] * v2[1] * v3[1];
  r[1] = v1[0] * v2[2] * v3[3] + v1[1] * v2[3] * v3[2];
  r[2] = v1[2] * v2[3] * v3[0] + v1[3] * v2[2] * v3[1];
  r[3] = v1[2] * v2[1] * v3[3] + v1[3] * v2[0] * v3[2];
  return r;
}

namespace {

DegeneracyVector one_child(int label, const DegeneracyVector& u) {
  DegeneracyVector r;
  switch (label) {
    case 1:
      r.v = {u[1], u[0] + u[1], u[3], u[2]};
      break;
    case 2:
      r.v = {u[1], u[3], u[2], u[0] + u[1]};
      break;
    case 3:
      r.v = {u[1], u[2], u[0] + u[1], u[3]};
      break;
    default:
      throw InvalidTreeError("child label outside {1,2,3}");
  }
  return r;
}

// Label pairs are reduced to (1,2), (2,3), (3,1): for the remaining pairs the
// two children swap roles.
DegeneracyVector two_children(int lu, const DegeneracyVector& uu, int lw,
                              const DegeneracyVector& ww) {
  const DegeneracyVector* u = &uu;
  const DegeneracyVector* w = &ww;
  int pair = lu * 10 + lw;
  if (pair == 21 || pair == 32 || pair == 13) {
    std::swap(u, w);
    pair = lw * 10 + lu;
  }
  DegeneracyVector r;
  switch (pair) {
    case 12:
      r.v = {(*u)[1] * (*w)[1], (*u)[0] * (*w)[2] + (*u)[1] * (*w)[3],
             (*u)[3] * (*w)[2], (*u)[2] * (*w)[1] + (*u)[3] * (*w)[0]};
      break;
    case 23:
      r.v = {(*u)[1] * (*w)[1], (*u)[3] * (*w)[2],
             (*u)[3] * (*w)[0] + (*u)[2] * (*w)[1],
             (*u)[1] * (*w)[3] + (*u)[0] * (*w)[2]};
      break;
    case 31:
      r.v = {(*u)[1] * (*w)[1], (*u)[3] * (*w)[0] + (*u)[2] * (*w)[1],
             (*u)[0] * (*w)[2] + (*u)[1] * (*w)[3], (*u)[3] * (*w)[2]};
      break;
    default:
      throw InvalidTreeError("sibling labels must be distinct");
  }
  return r;
}

// Children in label order (1, 2, 3).
DegeneracyVector three_children(const DegeneracyVector& u,
                                const DegeneracyVector& w,
                                const DegeneracyVector& z) {
  DegeneracyVector r;
  r.v = {u[0] * w[0] * z[0] + u[1] * w[1] * z[1],
         u[0] * w[2] * z[3] + u[1] * w[3] * z[2],
         u[2] * w[3] * z[0] + u[3] * w[2] * z[1],
         u[2] * w[1] * z[3] + u[3] * w[0] * z[2]};
  return r;
}

}  // namespace

DegeneracyVector root_vector(const TreeNode& node) {
  switch (node.children.size()) {
    case 0: {
      DegeneracyVector r;
      r.v = {BigInt(1), BigInt(1), BigInt(1), BigInt(1)};
      return r;
    }
    case 1:
      return one_child(node.children[0].label, root_vector(node.children[0]));
    case 2:
      return two_children(node.children[0].label, root_vector(node.children[0]),
                          node.children[1].label, root_vector(node.children[1]));
    case 3:
      return three_children(root_vector(node.children[0]),
                            root_vector(node.children[1]),
                            root_vector(node.children[2]));
    default:
      throw InvalidTreeError("a node carries more than three children");
  }
}

DegeneracyVector root_vector(const ColoredTernaryTree& t) {
  return root_vector(t.root);
}

DegeneracyVector degeneracy_vector(const StackTriangulation& t) {
  if (t.step_count() == 0) return base_vector();
  return root_vector(to_tree(t));
}

DegeneracyVector degeneracy_vector_recursive(const StackTriangulation& t) {
  const std::size_t n = t.step_count();
  if (n == 0) return base_vector();
  std::vector<std::array<std::size_t, 4>> child_of(n + 1, {0, 0, 0, 0});
  for (std::size_t i = 2; i <= n; ++i) {
    const FaceOrigin origin = t.step_origins()[i - 1];
    child_of[origin.creator][static_cast<std::size_t>(origin.position)] = i;
  }
  std::function<DegeneracyVector(std::size_t)> eval = [&](std::size_t step) {
    std::array<DegeneracyVector, 3> sub;
    for (std::size_t position = 1; position <= 3; ++position) {
      const std::size_t child = child_of[step][position];
      sub[position - 1] = child == 0 ? base_vector() : eval(child);
    }
    return combine_children(sub[0], sub[1], sub[2]);
  };
  return eval(1);
}

BigInt degeneracy(const DegeneracyVector& v) {
  return 2 * (v[1] + v[2] + v[3]);
}

}  // namespace matchstack
