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

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>

#include "errors.hpp"
#include "parallel.hpp"

namespace matchstack {

namespace {

constexpr std::size_t kMaxSpinVertices = 30;
constexpr std::size_t kMaxMatchingVertices = 40;
constexpr std::size_t kMaxIntersectingEdges = 45;

void guard(bool ok, const char* what) {
  if (!ok) throw TooLargeError(what);
}

inline bool equal_spins(SpinState state, VertexId x, VertexId y) {
  return (((state >> x) ^ (state >> y)) & 1u) == 0;
}

}  // namespace

long energy(const StackTriangulation& t, SpinState state) {
  guard(t.vertex_count() <= 64, "spin state holds at most 64 vertices");
  long frustrated = 0;
  for (const Edge& e : t.edges()) {
    if (equal_spins(state, e.u, e.v)) ++frustrated;
  }
  return 2 * frustrated - static_cast<long>(t.edges().size());
}

bool satisfies_face(const FaceRecord& f, SpinState state) {
  const int frustrated = int(equal_spins(state, f.a, f.b)) +
                         int(equal_spins(state, f.b, f.c)) +
                         int(equal_spins(state, f.c, f.a));
  return frustrated == 1;
}

bool satisfies_inner_faces(const StackTriangulation& t, SpinState state) {
  return std::all_of(t.inner_faces().begin(), t.inner_faces().end(),
                     [&](const FaceRecord& f) { return satisfies_face(f, state); });
}

DegeneracyVector count_satisfying_by_class(const StackTriangulation& t) {
  const std::size_t n = t.vertex_count();
  guard(n <= kMaxSpinVertices, "too many vertices for spin enumeration");
  // Fix spin(v0) = +1 and enumerate the remaining n-1 spins; classes
  // (+,-,-) etc. are then read off spins of v1, v2 directly.
  const std::uint64_t states = std::uint64_t{1} << (n - 1);
  const std::size_t workers = std::min<std::size_t>(worker_count(), 64);
  std::vector<std::array<std::uint64_t, 4>> partial(
      std::max<std::size_t>(workers, 1), {0, 0, 0, 0});

  // Contiguous ranges of the folded spin space, deterministic reduction.
  const std::uint64_t per = states / std::max<std::uint64_t>(workers, 1) + 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t begin = 0; begin < states; begin += per) {
    ranges.emplace_back(begin, std::min(begin + per, states));
  }
  parallel_chunks(ranges.size(), [&](std::size_t rb, std::size_t re) {
    for (std::size_t r = rb; r < re; ++r) {
      auto& bucket = partial[r];
      for (std::uint64_t rest = ranges[r].first; rest < ranges[r].second; ++rest) {
        const SpinState state = (rest << 1) | 1u;
        if (!satisfies_inner_faces(t, state)) continue;
        const unsigned s1 = (state >> 1) & 1u;
        const unsigned s2 = (state >> 2) & 1u;
        // (+ + +) -> 0, (+ + -) -> 1, (+ - +) -> 2, (+ - -) ~ (- + +) -> 3
        const std::size_t cls = s1 ? (s2 ? 0 : 1) : (s2 ? 2 : 3);
        ++bucket[cls];
      }
    }
  });

  DegeneracyVector out;
  for (const auto& bucket : partial) {
    for (std::size_t s = 0; s < 4; ++s) out[s] += bucket[s];
  }
  return out;
}

BigInt count_satisfying_total(const StackTriangulation& t) {
  const std::size_t n = t.vertex_count();
  guard(n <= kMaxSpinVertices, "too many vertices for spin enumeration");
  const std::uint64_t states = std::uint64_t{1} << n;
  std::uint64_t total = 0;
  for (std::uint64_t state = 0; state < states; ++state) {
    if (satisfies_inner_faces(t, state)) ++total;
  }
  return total;
}

BigInt count_groundstates(const StackTriangulation& t) {
  const std::size_t n = t.vertex_count();
  guard(n <= kMaxSpinVertices, "too many vertices for spin enumeration");
  const std::uint64_t states = std::uint64_t{1} << n;
  long best = std::numeric_limits<long>::max();
  std::uint64_t best_count = 0;
  std::uint64_t fully_satisfying = 0;
  for (std::uint64_t state = 0; state < states; ++state) {
    const long e = energy(t, state);
    if (e < best) {
      best = e;
      best_count = 1;
    } else if (e == best) {
      ++best_count;
    }
    if (satisfies_inner_faces(t, state) && satisfies_face(t.outer_face(), state)) {
      ++fully_satisfying;
    }
  }
  // Minimal energy is attained exactly on the states satisfying every face,
  // outer included.
  if (fully_satisfying != best_count) {
    throw PreconditionError(
        "groundstates and fully satisfying states disagree: " +
        std::to_string(best_count) + " vs " + std::to_string(fully_satisfying));
  }
  return best_count;
}

BigInt count_perfect_matchings(const CubicMultigraph& g) {
  guard(g.vertex_count <= kMaxMatchingVertices,
        "too many vertices for matching enumeration");
  if (g.vertex_count % 2 != 0) return 0;
  if (g.vertex_count == 0) return 1;

  // Multiplicity matrix; parallel edges are distinct choices.
  std::vector<std::vector<std::uint32_t>> mult(
      g.vertex_count, std::vector<std::uint32_t>(g.vertex_count, 0));
  for (const auto& [x, y] : g.edges) {
    if (x == y) continue;  // a loop can never be matched
    ++mult[x][y];
    ++mult[y][x];
  }

  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(std::uint64_t)> rec = [&](std::uint64_t remaining) -> BigInt {
    if (remaining == 0) return 1;
    const auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    const unsigned v = static_cast<unsigned>(std::countr_zero(remaining));
    BigInt total = 0;
    for (std::size_t u = 0; u < g.vertex_count; ++u) {
      if (u == v || mult[v][u] == 0) continue;
      if (!(remaining & (std::uint64_t{1} << u))) continue;
      const std::uint64_t rest =
          remaining & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u);
      total += mult[v][u] * rec(rest);
    }
    memo.emplace(remaining, total);
    return total;
  };
  const std::uint64_t all = g.vertex_count == 64
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << g.vertex_count) - 1;
  return rec(all);
}

namespace {

struct FaceIncidence {
  // For each face (inner faces in list order, outer last): the indices of its
  // three boundary edges in t.edges().
  std::vector<std::array<std::size_t, 3>> face_edges;
  // For each edge: the two faces it bounds.
  std::vector<std::array<std::size_t, 2>> edge_faces;
};

FaceIncidence build_incidence(const StackTriangulation& t) {
  std::vector<FaceRecord> faces = t.inner_faces();
  faces.push_back(t.outer_face());

  auto edge_index = [&](VertexId x, VertexId y) {
    const Edge e = make_edge(x, y);
    const auto& edges = t.edges();
    const auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw PreconditionError("face edge missing from edge list");
    return static_cast<std::size_t>(it - edges.begin());
  };

  FaceIncidence inc;
  inc.face_edges.resize(faces.size());
  std::vector<std::vector<std::size_t>> edge_faces(t.edges().size());
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const FaceRecord& f = faces[fi];
    inc.face_edges[fi] = {edge_index(f.a, f.b), edge_index(f.b, f.c),
                          edge_index(f.c, f.a)};
    for (std::size_t ei : inc.face_edges[fi]) edge_faces[ei].push_back(fi);
  }
  inc.edge_faces.resize(t.edges().size());
  for (std::size_t ei = 0; ei < edge_faces.size(); ++ei) {
    if (edge_faces[ei].size() != 2) {
      throw PreconditionError("edge is not shared by exactly two faces");
    }
    inc.edge_faces[ei] = {edge_faces[ei][0], edge_faces[ei][1]};
  }
  return inc;
}

void intersecting_backtrack(const FaceIncidence& inc, std::size_t face,
                            std::vector<int>& chosen_per_face,
                            std::vector<bool>& in_set,
                            std::vector<std::size_t>& picks,
                            const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (face == inc.face_edges.size()) {
    emit(picks);
    return;
  }
  if (chosen_per_face[face] == 1) {
    intersecting_backtrack(inc, face + 1, chosen_per_face, in_set, picks, emit);
    return;
  }
  for (std::size_t ei : inc.face_edges[face]) {
    if (in_set[ei]) continue;
    const auto [f1, f2] = inc.edge_faces[ei];
    const std::size_t other = f1 == face ? f2 : f1;
    if (chosen_per_face[other] == 1) continue;
    in_set[ei] = true;
    ++chosen_per_face[face];
    ++chosen_per_face[other];
    picks.push_back(ei);
    intersecting_backtrack(inc, face + 1, chosen_per_face, in_set, picks, emit);
    picks.pop_back();
    --chosen_per_face[other];
    --chosen_per_face[face];
    in_set[ei] = false;
  }
}

}  // namespace

void for_each_intersecting_set(
    const StackTriangulation& t,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  guard(t.edges().size() <= kMaxIntersectingEdges,
        "too many edges for intersecting-set enumeration");
  const FaceIncidence inc = build_incidence(t);
  std::vector<int> chosen(inc.face_edges.size(), 0);
  std::vector<bool> in_set(t.edges().size(), false);
  std::vector<std::size_t> picks;
  intersecting_backtrack(inc, 0, chosen, in_set, picks, fn);
}

BigInt count_intersecting_sets(const StackTriangulation& t) {
  BigInt total = 0;
  for_each_intersecting_set(t, [&](const std::vector<std::size_t>&) { ++total; });
  return total;
}

bool is_bridgeless(const CubicMultigraph& g) {
  if (g.vertex_count == 0) return true;
  auto connected_without = [&](std::size_t skip) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      if (ei == skip) continue;
      adj[g.edges[ei].first].push_back(g.edges[ei].second);
      adj[g.edges[ei].second].push_back(g.edges[ei].first);
    }
    std::vector<bool> seen(g.vertex_count, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          ++reached;
          q.push(u);
        }
      }
    }
    return reached == g.vertex_count;
  };
  if (!connected_without(g.edges.size())) return false;  // disconnected already
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (!connected_without(ei)) return false;
  }
  return true;
}

bool deletion_leaves_bipartite(const StackTriangulation& t,
                               const std::vector<std::size_t>& edge_indices) {
  std::vector<bool> removed(t.edges().size(), false);
  for (std::size_t ei : edge_indices) removed.at(ei) = true;
  std::vector<std::vector<std::size_t>> adj(t.vertex_count());
  for (std::size_t ei = 0; ei < t.edges().size(); ++ei) {
    if (removed[ei]) continue;
    adj[t.edges()[ei].u].push_back(t.edges()[ei].v);
    adj[t.edges()[ei].v].push_back(t.edges()[ei].u);
  }
  std::vector<int> color(t.vertex_count(), -1);
  for (std::size_t start = 0; start < t.vertex_count(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t u : adj[v]) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace matchstack
