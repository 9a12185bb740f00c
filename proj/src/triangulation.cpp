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

#include "triangulation.hpp"

#include <limits>
#include <random>
#include <string>
#include <unordered_map>

#include "errors.hpp"

namespace matchstack {

Edge make_edge(VertexId x, VertexId y) {
  return x < y ? Edge{x, y} : Edge{y, x};
}

StackTriangulation StackTriangulation::root_triangle() {
  StackTriangulation t;
  t.vertex_count_ = 3;
  t.inner_faces_ = {FaceRecord{0, 1, 2}};
  t.face_origins_ = {FaceOrigin{0, 0}};
  t.edges_ = {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}};
  return t;
}

StackTriangulation StackTriangulation::grown(std::size_t face_index) const {
  if (face_index >= inner_faces_.size()) {
    throw IndexError("face index " + std::to_string(face_index) +
                     " out of range; inner-face list has " +
                     std::to_string(inner_faces_.size()) + " entries");
  }
  StackTriangulation t = *this;
  const FaceRecord f = t.inner_faces_[face_index];
  const FaceOrigin filled = t.face_origins_[face_index];
  const VertexId u = static_cast<VertexId>(t.vertex_count_++);
  const std::size_t step = t.history_.size() + 1;

  t.inner_faces_.erase(t.inner_faces_.begin() + static_cast<std::ptrdiff_t>(face_index));
  t.face_origins_.erase(t.face_origins_.begin() + static_cast<std::ptrdiff_t>(face_index));
  t.inner_faces_.push_back(FaceRecord{f.a, f.b, u});
  t.inner_faces_.push_back(FaceRecord{f.b, f.c, u});
  t.inner_faces_.push_back(FaceRecord{f.c, f.a, u});
  t.face_origins_.push_back(FaceOrigin{step, 1});
  t.face_origins_.push_back(FaceOrigin{step, 2});
  t.face_origins_.push_back(FaceOrigin{step, 3});

  t.edges_.push_back(make_edge(f.a, u));
  t.edges_.push_back(make_edge(f.b, u));
  t.edges_.push_back(make_edge(f.c, u));

  t.history_.push_back(face_index);
  t.step_origins_.push_back(filled);
  return t;
}

StackTriangulation StackTriangulation::from_history(const GrowthHistory& history) {
  StackTriangulation t = root_triangle();
  for (std::size_t choice : history) t = t.grown(choice);
  return t;
}

CubicMultigraph dual(const StackTriangulation& t) {
  CubicMultigraph g;
  g.face_of = t.inner_faces();
  g.face_of.push_back(t.outer_face());
  g.vertex_count = g.face_of.size();

  struct EdgeKey {
    std::uint64_t packed;
    bool operator==(const EdgeKey& o) const { return packed == o.packed; }
  };
  struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& k) const {
      return std::hash<std::uint64_t>{}(k.packed);
    }
  };
  auto key = [](const Edge& e) {
    return EdgeKey{(static_cast<std::uint64_t>(e.u) << 32) | e.v};
  };

  std::unordered_map<EdgeKey, std::vector<std::size_t>, EdgeKeyHash> incident;
  for (std::size_t fi = 0; fi < g.face_of.size(); ++fi) {
    const FaceRecord& f = g.face_of[fi];
    incident[key(make_edge(f.a, f.b))].push_back(fi);
    incident[key(make_edge(f.b, f.c))].push_back(fi);
    incident[key(make_edge(f.c, f.a))].push_back(fi);
  }

  g.edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) {
    const auto& faces = incident.at(key(e));
    if (faces.size() != 2) {
      throw PreconditionError("edge is not shared by exactly two faces");
    }
    const std::size_t x = faces[0];
    const std::size_t y = faces[1];
    g.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  return g;
}

BigInt history_count(std::size_t length) {
  BigInt n = 1;
  for (std::size_t i = 0; i < length; ++i) n *= 2 * i + 1;
  return n;
}

HistoryEnumerator::HistoryEnumerator(std::size_t length)
    : current_(length, 0) {}

const GrowthHistory* HistoryEnumerator::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  // Mixed-radix increment; position i counts in base 2i+1.
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    if (++current_[i] < 2 * i + 1) return &current_;
    current_[i] = 0;
  }
  done_ = true;
  return nullptr;
}

void for_each_history(std::size_t length,
                      const std::function<void(const GrowthHistory&)>& fn) {
  HistoryEnumerator en(length);
  while (const GrowthHistory* h = en.next()) fn(*h);
}

std::size_t uniform_below(std::mt19937_64& gen, std::size_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

GrowthHistory random_history(std::size_t length, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  GrowthHistory h(length);
  for (std::size_t i = 0; i < length; ++i) h[i] = uniform_below(gen, 2 * i + 1);
  return h;
}

}  // namespace matchstack
