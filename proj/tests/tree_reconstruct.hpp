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

// Test-side oracle: rebuilds the colored tree of a grown triangulation from
// its inner-face set alone, never consulting the growth history.
//
// Inside a region bounded by (a, b, c) the first vertex inserted there is the
// unique non-corner vertex joined to all three corners (a later vertex would
// need its insertion face to contain a, b and c, but every sub-face loses a
// corner).  Cutting the region's faces at the three apex edges splits them
// into the sub-regions (a, b, u), (b, c, u), (c, a, u), which carry child
// labels 1, 2, 3.  Visiting the apexes in that recursion order also gives a
// canonical renumbering of the inserted vertices, so two histories build the
// same triangulation up to renumbering exactly when their canonical face
// lists coincide.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "triangulation.hpp"

namespace face_reconstruct {

using Face = std::array<matchstack::VertexId, 3>;
using VertexPair = std::pair<matchstack::VertexId, matchstack::VertexId>;

// Rotation-normal form: smallest vertex first, orientation preserved.
inline Face rotated(Face f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (f[i] < f[best]) best = i;
  }
  return Face{f[best], f[(best + 1) % 3], f[(best + 2) % 3]};
}

inline VertexPair ordered(matchstack::VertexId x, matchstack::VertexId y) {
  return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

struct Reconstruction {
  matchstack::ColoredTernaryTree tree;
  // Faces after canonical renumbering, rotation-normalized and sorted.
  std::vector<Face> canonical_faces;
};

namespace detail {

struct RegionBuilder {
  std::map<matchstack::VertexId, matchstack::VertexId> relabel{
      {0, 0}, {1, 1}, {2, 2}};
  matchstack::VertexId next = 3;

  // Region bounded by (a, b, c) holding `faces`, already known subdivided
  // (faces.size() > 1).  Returns the node for the vertex that split it.
  matchstack::TreeNode build(matchstack::VertexId a, matchstack::VertexId b,
                             matchstack::VertexId c, std::vector<Face> faces,
                             int label) {
    std::set<VertexPair> edges;
    std::set<matchstack::VertexId> vertices;
    for (const Face& f : faces) {
      for (int e = 0; e < 3; ++e) {
        edges.insert(ordered(f[e], f[(e + 1) % 3]));
        vertices.insert(f[e]);
      }
    }
    bool found = false;
    matchstack::VertexId apex = 0;
    for (matchstack::VertexId v : vertices) {
      if (v == a || v == b || v == c) continue;
      if (edges.count(ordered(v, a)) && edges.count(ordered(v, b)) &&
          edges.count(ordered(v, c))) {
        if (found) throw std::logic_error("region has two apex candidates");
        apex = v;
        found = true;
      }
    }
    if (!found) throw std::logic_error("subdivided region has no apex");
    relabel[apex] = next++;

    std::map<VertexPair, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (int e = 0; e < 3; ++e) {
        by_edge[ordered(faces[i][e], faces[i][(e + 1) % 3])].push_back(i);
      }
    }
    const std::set<VertexPair> cut{ordered(apex, a), ordered(apex, b),
                                   ordered(apex, c)};
    std::vector<int> part(faces.size(), -1);
    const std::array<VertexPair, 3> boundary{ordered(a, b), ordered(b, c),
                                             ordered(c, a)};
    for (int k = 0; k < 3; ++k) {
      // The region's own boundary edge lies on exactly one of its faces; that
      // face seeds the flood fill of sub-region k.
      const std::vector<std::size_t>& holders = by_edge.at(boundary[k]);
      if (holders.size() != 1) {
        throw std::logic_error("boundary edge not on exactly one face");
      }
      std::vector<std::size_t> pending{holders.front()};
      part[holders.front()] = k;
      while (!pending.empty()) {
        const std::size_t i = pending.back();
        pending.pop_back();
        for (int e = 0; e < 3; ++e) {
          const VertexPair key = ordered(faces[i][e], faces[i][(e + 1) % 3]);
          if (cut.count(key)) continue;
          for (std::size_t j : by_edge.at(key)) {
            if (part[j] < 0) {
              part[j] = k;
              pending.push_back(j);
            }
          }
        }
      }
    }
    std::array<std::vector<Face>, 3> parts;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (part[i] < 0) throw std::logic_error("face outside every sub-region");
      parts[part[i]].push_back(faces[i]);
    }
    const std::array<Face, 3> corners{Face{a, b, apex}, Face{b, c, apex},
                                      Face{c, a, apex}};
    matchstack::TreeNode node;
    node.label = label;
    for (int k = 0; k < 3; ++k) {
      if (parts[k].size() == 1) continue;  // bare sub-face, nothing inserted
      node.children.push_back(build(corners[k][0], corners[k][1],
                                    corners[k][2], std::move(parts[k]), k + 1));
    }
    return node;
  }
};

}  // namespace detail

inline Reconstruction reconstruct(const matchstack::StackTriangulation& t) {
  if (t.step_count() == 0) {
    throw std::logic_error("the base triangle has no tree");
  }
  std::vector<Face> all;
  all.reserve(t.inner_faces().size());
  for (const matchstack::FaceRecord& f : t.inner_faces()) {
    all.push_back(Face{f.a, f.b, f.c});
  }
  detail::RegionBuilder builder;
  Reconstruction out;
  out.tree.root = builder.build(0, 1, 2, std::move(all), 0);
  out.canonical_faces.reserve(t.inner_faces().size());
  for (const matchstack::FaceRecord& f : t.inner_faces()) {
    out.canonical_faces.push_back(rotated(Face{builder.relabel.at(f.a),
                                               builder.relabel.at(f.b),
                                               builder.relabel.at(f.c)}));
  }
  std::sort(out.canonical_faces.begin(), out.canonical_faces.end());
  return out;
}

// Rotation-normalized, sorted faces without renumbering; equals
// reconstruct(t).canonical_faces exactly when t is already canonically
// numbered (depth-first, label-ascending insertion order).
inline std::vector<Face> normalized_faces(const matchstack::StackTriangulation& t) {
  std::vector<Face> out;
  out.reserve(t.inner_faces().size());
  for (const matchstack::FaceRecord& f : t.inner_faces()) {
    out.push_back(rotated(Face{f.a, f.b, f.c}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace face_reconstruct
