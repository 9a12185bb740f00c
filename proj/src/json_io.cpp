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

#include "json_io.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace matchstack {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json history_to_json(const GrowthHistory& h) {
  Json j = Json::array();
  for (std::size_t c : h) j.push_back(c);
  return j;
}

GrowthHistory history_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("history must be a JSON array");
  GrowthHistory h;
  h.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_number_integer() || item.is_number_float()) {
      throw ParseError("history entries must be integers");
    }
    const auto value = item.get<long long>();
    if (value < 0) throw ParseError("history entries must be nonnegative");
    h.push_back(static_cast<std::size_t>(value));
  }
  return h;
}

GrowthHistory parse_history(const std::string& text) {
  return history_from_json(parse_json(text));
}

Json triangulation_to_json(const StackTriangulation& t) {
  Json faces = Json::array();
  for (const FaceRecord& f : t.inner_faces()) {
    faces.push_back(Json::array({f.a, f.b, f.c}));
  }
  Json j;
  j["vertices"] = t.vertex_count();
  j["faces"] = std::move(faces);
  const FaceRecord outer = t.outer_face();
  j["outer"] = Json::array({outer.a, outer.b, outer.c});
  j["history"] = history_to_json(t.history());
  return j;
}

namespace {

Json node_to_json(const TreeNode& node, bool root) {
  Json j;
  if (root) {
    j["label"] = nullptr;
  } else {
    j["label"] = node.label;
  }
  Json children = Json::array();
  for (const TreeNode& c : node.children) children.push_back(node_to_json(c, false));
  j["children"] = std::move(children);
  return j;
}

TreeNode node_from_json(const Json& j, bool root) {
  if (!j.is_object()) throw ParseError("tree node must be a JSON object");
  TreeNode node;
  const auto label_it = j.find("label");
  if (root) {
    if (label_it != j.end() && !label_it->is_null()) {
      throw ParseError("root label must be null");
    }
  } else {
    if (label_it == j.end() || !label_it->is_number_integer()) {
      throw ParseError("child node needs an integer label");
    }
    node.label = label_it->get<int>();
  }
  const auto children_it = j.find("children");
  if (children_it != j.end()) {
    if (!children_it->is_array()) throw ParseError("children must be an array");
    for (const Json& c : *children_it) {
      node.children.push_back(node_from_json(c, false));
    }
  }
  // Accept any input order; storage is label-ascending.
  std::sort(node.children.begin(), node.children.end(),
            [](const TreeNode& a, const TreeNode& b) { return a.label < b.label; });
  return node;
}

}  // namespace

Json tree_to_json(const ColoredTernaryTree& t) { return node_to_json(t.root, true); }

ColoredTernaryTree tree_from_json(const Json& j) {
  ColoredTernaryTree t{node_from_json(j, true)};
  try {
    validate_tree(t);
  } catch (const InvalidTreeError& e) {
    throw ParseError(e.what());
  }
  return t;
}

ColoredTernaryTree parse_tree(const std::string& text) {
  return tree_from_json(parse_json(text));
}

namespace {

void node_to_dot(const TreeNode& node, std::size_t id, std::size_t& next,
                 std::ostringstream& out) {
  for (const TreeNode& c : node.children) {
    const std::size_t child_id = next++;
    out << "  " << id << " -- " << child_id << " [label=" << c.label << "];\n";
    node_to_dot(c, child_id, next, out);
  }
}

}  // namespace

std::string tree_to_dot(const ColoredTernaryTree& t) {
  std::ostringstream out;
  out << "graph tree {\n  0;\n";
  std::size_t next = 1;
  node_to_dot(t.root, 0, next, out);
  out << "}\n";
  return out.str();
}

Json dual_to_json(const CubicMultigraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  Json face_of = Json::array();
  for (const FaceRecord& f : g.face_of) {
    face_of.push_back(Json::array({f.a, f.b, f.c}));
  }
  Json j;
  j["vertices"] = g.vertex_count;
  j["edges"] = std::move(edges);
  j["face_of"] = std::move(face_of);
  return j;
}

std::string dual_to_dot(const CubicMultigraph& g) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Json vector_to_json(const DegeneracyVector& v) {
  Json j = Json::array();
  for (std::size_t s = 0; s < 4; ++s) j.push_back(v[s].str());
  return j;
}

DegeneracyVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("vector must be an array of four decimal strings");
  }
  DegeneracyVector v;
  for (std::size_t s = 0; s < 4; ++s) {
    if (!j[s].is_string()) throw ParseError("vector entries must be strings");
    try {
      v[s] = BigInt(j[s].get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("vector entry is not a decimal integer");
    }
    if (v[s] < 0) throw ParseError("vector entries must be nonnegative");
  }
  return v;
}

Json exponents_to_json(const ExponentVector& e) {
  return Json::array({e[0], e[1], e[2], e[3]});
}

}  // namespace matchstack
