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

#include <string>

#include <json.hpp>

#include "bijection.hpp"
#include "bounds.hpp"
#include "transfer.hpp"
#include "triangulation.hpp"

namespace matchstack {

// Key order in emitted objects is part of the format, hence ordered_json.
using Json = nlohmann::ordered_json;

// History: JSON array of face indices, e.g. [0,2,4].
Json history_to_json(const GrowthHistory& h);
GrowthHistory history_from_json(const Json& j);
GrowthHistory parse_history(const std::string& text);

// Triangulation: {"vertices": n, "faces": [[a,b,c],...], "outer": [0,1,2],
// "history": [...]}; faces in list order, marked edge first.
Json triangulation_to_json(const StackTriangulation& t);

// Tree: {"label": null, "children": [...]}, children label-ascending.
Json tree_to_json(const ColoredTernaryTree& t);
ColoredTernaryTree tree_from_json(const Json& j);
ColoredTernaryTree parse_tree(const std::string& text);
std::string tree_to_dot(const ColoredTernaryTree& t);

// Dual: {"vertices": n, "edges": [[u,v],...], "face_of": [[a,b,c],...]},
// edges in primal creation order, parallel edges repeated.
Json dual_to_json(const CubicMultigraph& g);
std::string dual_to_dot(const CubicMultigraph& g);

// Degeneracy vector: array of four decimal strings, e.g. ["0","1","1","1"].
Json vector_to_json(const DegeneracyVector& v);
DegeneracyVector vector_from_json(const Json& j);

Json exponents_to_json(const ExponentVector& e);

// Wraps nlohmann parsing, rethrowing as ParseError.
Json parse_json(const std::string& text);

}  // namespace matchstack
