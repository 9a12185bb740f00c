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

#include "matchstack.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bijection.hpp"
#include "bounds.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "oracles.hpp"
#include "transfer.hpp"
#include "triangulation.hpp"
#include "verify.hpp"

struct ms_triangulation {
  matchstack::StackTriangulation impl;
};

struct ms_tree {
  matchstack::ColoredTernaryTree impl;
};

struct ms_dual {
  matchstack::CubicMultigraph impl;
};

struct ms_history_iter {
  matchstack::HistoryEnumerator impl;

  explicit ms_history_iter(std::size_t length) : impl(length) {}
};

namespace {

using namespace matchstack;

thread_local std::string g_last_error;

// Out parameters are written only on success, so the body may fail halfway
// through without leaking partial results to the caller.
template <typename Fn>
ms_status guard(Fn&& body) {
  try {
    body();
    return MS_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return MS_ERR_PARSE;
  } catch (const IndexError& e) {
    g_last_error = e.what();
    return MS_ERR_INDEX_RANGE;
  } catch (const InvalidTreeError& e) {
    g_last_error = e.what();
    return MS_ERR_INVALID_TREE;
  } catch (const PreconditionError& e) {
    g_last_error = e.what();
    return MS_ERR_PRECONDITION;
  } catch (const TooLargeError& e) {
    g_last_error = e.what();
    return MS_ERR_TOO_LARGE;
  } catch (const UnknownNameError& e) {
    g_last_error = e.what();
    return MS_ERR_UNKNOWN_NAME;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return MS_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MS_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MS_ERR_INTERNAL;
  }
}

bool missing(const void* p) { return p == nullptr; }

ms_status invalid(const char* message) {
  g_last_error = message;
  return MS_ERR_INVALID_ARGUMENT;
}

// malloc so a pure-C caller could free() in a pinch; the documented contract
// stays ms_string_free.
char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

BigInt parse_decimal(const char* text) {
  if (text == nullptr || *text == '\0') throw ParseError("empty decimal string");
  for (const char* p = text; *p != '\0'; ++p) {
    if (*p < '0' || *p > '9') {
      throw ParseError(std::string("invalid decimal string: ") + text);
    }
  }
  return BigInt(text);
}

Json analyze_json(const GrowthHistory& history) {
  const StackTriangulation t = StackTriangulation::from_history(history);
  const DegeneracyVector vec = degeneracy_vector(t);
  const BigInt d = degeneracy(vec);
  const CubicMultigraph g = dual(t);

  Json out;
  out["history"] = history_to_json(history);
  out["vertices"] = t.vertex_count();
  out["inner_faces"] = t.inner_faces().size();
  out["edges"] = t.edges().size();
  out["tree"] = t.step_count() == 0 ? Json(nullptr) : tree_to_json(to_tree(t));
  out["degeneracy_vector"] = vector_to_json(vec);
  out["degeneracy"] = d.str();
  bool positive = true;
  for (std::size_t s = 0; s < 4; ++s) positive = positive && vec[s] > 0;
  if (positive) {
    const ExponentVector e = max_exponent_vector(vec);
    Json m;
    m["exponents"] = exponents_to_json(e);
    m["psi"] = psi(e);
    m["phi"] = phi_functional(e);
    out["exponent_summary"] = std::move(m);
  } else {
    out["exponent_summary"] = nullptr;
  }
  out["dual_vertices"] = g.vertex_count;
  out["dual_edges"] = g.edges.size();
  const BigInt matchings = d / 2;
  out["matchings"] = matchings.str();
  out["theorem_holds"] = theorem_bound_check(t.vertex_count(), d);
  out["corollary_holds"] = corollary_bound_check(g.vertex_count, matchings);
  return out;
}

}  // namespace

extern "C" {

const char* ms_version(void) { return "0.1.0"; }

const char* ms_last_error(void) { return g_last_error.c_str(); }

void ms_string_free(char* s) { std::free(s); }

ms_status ms_history_count(size_t length, char** out_decimal) {
  if (missing(out_decimal)) return invalid("out_decimal is NULL");
  return guard([&] { *out_decimal = dup_string(history_count(length).str()); });
}

ms_status ms_history_iter_new(size_t length, ms_history_iter** out) {
  if (missing(out)) return invalid("out is NULL");
  return guard([&] { *out = new ms_history_iter(length); });
}

ms_status ms_history_iter_next(ms_history_iter* it, char** out_json) {
  if (missing(it)) return invalid("iterator is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] {
    const GrowthHistory* h = it->impl.next();
    *out_json = h == nullptr ? nullptr : dup_string(history_to_json(*h).dump());
  });
}

void ms_history_iter_free(ms_history_iter* it) { delete it; }

ms_status ms_random_history(size_t length, uint64_t seed, char** out_json) {
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] {
    *out_json = dup_string(history_to_json(random_history(length, seed)).dump());
  });
}

ms_status ms_triangulation_from_history(const char* history_json,
                                        ms_triangulation** out) {
  if (missing(history_json)) return invalid("history_json is NULL");
  if (missing(out)) return invalid("out is NULL");
  return guard([&] {
    *out = new ms_triangulation{
        StackTriangulation::from_history(parse_history(history_json))};
  });
}

void ms_triangulation_free(ms_triangulation* t) { delete t; }

ms_status ms_triangulation_vertex_count(const ms_triangulation* t, size_t* out) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out)) return invalid("out is NULL");
  *out = t->impl.vertex_count();
  return MS_OK;
}

ms_status ms_triangulation_inner_face_count(const ms_triangulation* t,
                                            size_t* out) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out)) return invalid("out is NULL");
  *out = t->impl.inner_faces().size();
  return MS_OK;
}

ms_status ms_triangulation_edge_count(const ms_triangulation* t, size_t* out) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out)) return invalid("out is NULL");
  *out = t->impl.edges().size();
  return MS_OK;
}

ms_status ms_triangulation_to_json(const ms_triangulation* t, char** out_json) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] { *out_json = dup_string(triangulation_to_json(t->impl).dump()); });
}

ms_status ms_degeneracy(const ms_triangulation* t, char** out_decimal) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out_decimal)) return invalid("out_decimal is NULL");
  return guard([&] {
    *out_decimal = dup_string(degeneracy(degeneracy_vector(t->impl)).str());
  });
}

ms_status ms_degeneracy_vector(const ms_triangulation* t, char** out_json) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] {
    *out_json = dup_string(vector_to_json(degeneracy_vector(t->impl)).dump());
  });
}

ms_status ms_count_groundstates(const ms_triangulation* t, char** out_decimal) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out_decimal)) return invalid("out_decimal is NULL");
  return guard([&] {
    *out_decimal = dup_string(count_groundstates(t->impl).str());
  });
}

ms_status ms_count_intersecting_sets(const ms_triangulation* t,
                                     char** out_decimal) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out_decimal)) return invalid("out_decimal is NULL");
  return guard([&] {
    *out_decimal = dup_string(count_intersecting_sets(t->impl).str());
  });
}

ms_status ms_triangulation_tree(const ms_triangulation* t, ms_tree** out) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out)) return invalid("out is NULL");
  return guard([&] { *out = new ms_tree{to_tree(t->impl)}; });
}

ms_status ms_tree_parse(const char* json, ms_tree** out) {
  if (missing(json)) return invalid("json is NULL");
  if (missing(out)) return invalid("out is NULL");
  return guard([&] { *out = new ms_tree{parse_tree(json)}; });
}

void ms_tree_free(ms_tree* t) { delete t; }

ms_status ms_tree_size(const ms_tree* t, size_t* out) {
  if (missing(t)) return invalid("tree is NULL");
  if (missing(out)) return invalid("out is NULL");
  *out = tree_size(t->impl);
  return MS_OK;
}

ms_status ms_tree_to_json(const ms_tree* t, char** out_json) {
  if (missing(t)) return invalid("tree is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] { *out_json = dup_string(tree_to_json(t->impl).dump()); });
}

ms_status ms_tree_to_dot(const ms_tree* t, char** out_dot) {
  if (missing(t)) return invalid("tree is NULL");
  if (missing(out_dot)) return invalid("out_dot is NULL");
  return guard([&] { *out_dot = dup_string(tree_to_dot(t->impl)); });
}

ms_status ms_tree_history(const ms_tree* t, char** out_json) {
  if (missing(t)) return invalid("tree is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] {
    *out_json = dup_string(history_to_json(canonical_history(t->impl)).dump());
  });
}

ms_status ms_tree_root_vector(const ms_tree* t, char** out_json) {
  if (missing(t)) return invalid("tree is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] {
    *out_json = dup_string(vector_to_json(root_vector(t->impl)).dump());
  });
}

ms_status ms_triangulation_dual(const ms_triangulation* t, ms_dual** out) {
  if (missing(t)) return invalid("triangulation is NULL");
  if (missing(out)) return invalid("out is NULL");
  return guard([&] { *out = new ms_dual{dual(t->impl)}; });
}

void ms_dual_free(ms_dual* d) { delete d; }

ms_status ms_dual_vertex_count(const ms_dual* d, size_t* out) {
  if (missing(d)) return invalid("dual is NULL");
  if (missing(out)) return invalid("out is NULL");
  *out = d->impl.vertex_count;
  return MS_OK;
}

ms_status ms_dual_edge_count(const ms_dual* d, size_t* out) {
  if (missing(d)) return invalid("dual is NULL");
  if (missing(out)) return invalid("out is NULL");
  *out = d->impl.edges.size();
  return MS_OK;
}

ms_status ms_dual_to_json(const ms_dual* d, char** out_json) {
  if (missing(d)) return invalid("dual is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] { *out_json = dup_string(dual_to_json(d->impl).dump()); });
}

ms_status ms_dual_to_dot(const ms_dual* d, char** out_dot) {
  if (missing(d)) return invalid("dual is NULL");
  if (missing(out_dot)) return invalid("out_dot is NULL");
  return guard([&] { *out_dot = dup_string(dual_to_dot(d->impl)); });
}

ms_status ms_dual_perfect_matchings(const ms_dual* d, char** out_decimal) {
  if (missing(d)) return invalid("dual is NULL");
  if (missing(out_decimal)) return invalid("out_decimal is NULL");
  return guard([&] {
    *out_decimal = dup_string(count_perfect_matchings(d->impl).str());
  });
}

ms_status ms_golden_power_leq(size_t exponent, const char* x_decimal,
                              int* out_leq) {
  if (missing(x_decimal)) return invalid("x_decimal is NULL");
  if (missing(out_leq)) return invalid("out_leq is NULL");
  return guard([&] {
    *out_leq = golden_power_leq(exponent, parse_decimal(x_decimal)) ? 1 : 0;
  });
}

ms_status ms_theorem_bound_check(size_t triangulation_size,
                                 const char* degeneracy_decimal,
                                 unsigned denominator, int* out_holds) {
  if (missing(degeneracy_decimal)) return invalid("degeneracy_decimal is NULL");
  if (missing(out_holds)) return invalid("out_holds is NULL");
  return guard([&] {
    *out_holds = theorem_bound_check(triangulation_size,
                                     parse_decimal(degeneracy_decimal),
                                     denominator)
                     ? 1
                     : 0;
  });
}

ms_status ms_corollary_bound_check(size_t dual_size,
                                   const char* matchings_decimal,
                                   unsigned denominator, int* out_holds) {
  if (missing(matchings_decimal)) return invalid("matchings_decimal is NULL");
  if (missing(out_holds)) return invalid("out_holds is NULL");
  return guard([&] {
    *out_holds = corollary_bound_check(dual_size, parse_decimal(matchings_decimal),
                                       denominator)
                     ? 1
                     : 0;
  });
}

ms_status ms_analyze(const char* history_json, char** out_json) {
  if (missing(history_json)) return invalid("history_json is NULL");
  if (missing(out_json)) return invalid("out_json is NULL");
  return guard([&] {
    *out_json = dup_string(analyze_json(parse_history(history_json)).dump());
  });
}

ms_status ms_export(const char* history_json, const char* what,
                    const char* format, char** out) {
  if (missing(history_json)) return invalid("history_json is NULL");
  if (missing(what)) return invalid("what is NULL");
  if (missing(format)) return invalid("format is NULL");
  if (missing(out)) return invalid("out is NULL");
  return guard([&] {
    const std::string kind(what);
    const std::string fmt(format);
    if (fmt != "json" && fmt != "dot") {
      throw UnknownNameError("unknown format: " + fmt);
    }
    const StackTriangulation t =
        StackTriangulation::from_history(parse_history(history_json));
    std::string rendered;
    if (kind == "tri") {
      if (fmt != "json") {
        throw UnknownNameError("tri supports only the json format");
      }
      rendered = triangulation_to_json(t).dump();
    } else if (kind == "tree") {
      const ColoredTernaryTree tree = to_tree(t);
      rendered = fmt == "json" ? tree_to_json(tree).dump() : tree_to_dot(tree);
    } else if (kind == "dual") {
      const CubicMultigraph g = dual(t);
      rendered = fmt == "json" ? dual_to_json(g).dump() : dual_to_dot(g);
    } else {
      throw UnknownNameError("unknown export kind: " + kind);
    }
    *out = dup_string(rendered);
  });
}

ms_status ms_verify(const char* suite, size_t max_n, size_t allow_below,
                    ms_report_sink sink, void* user_data,
                    char** out_summary_json) {
  if (missing(suite)) return invalid("suite is NULL");
  if (missing(out_summary_json)) return invalid("out_summary_json is NULL");
  return guard([&] {
    ReportSink adapter;
    if (sink != nullptr) {
      adapter = [sink, user_data](const std::string& line) {
        sink(line.c_str(), user_data);
      };
    }
    Json summary = Json::array();
    for (const SweepReport& report :
         run_suites(suite, max_n, allow_below, adapter)) {
      summary.push_back(report.to_json());
    }
    *out_summary_json = dup_string(summary.dump());
  });
}

}  // extern "C"
