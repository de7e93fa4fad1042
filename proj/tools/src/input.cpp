// Copyright 2026 The Authors.
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

#include "input.hpp"

#include <fstream>
#include <initializer_list>
#include <iostream>

#include "cfgpoly/error.hpp"

namespace cfgpoly::cli {

namespace {

const Json& locate(const Json& j, const char* marker, std::initializer_list<const char*> wrappers,
                   const char* what) {
  if (j.is_object()) {
    if (j.contains(marker)) return j;
    for (const char* w : wrappers) {
      auto it = j.find(w);
      if (it != j.end() && it->is_object() && it->contains(marker)) return *it;
    }
  }
  throw Error(Errc::kInvalidInput, std::string("input does not contain a ") + what);
}

}  // namespace

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(Errc::kInvalidInput, "cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::kInvalidInput, "malformed JSON in '" + path + "': " + e.what());
  }
}

Configuration load_config(const Json& j) {
  return io::config_from_json(
      locate(j, "ground_set", {"config", "reduced", "power", "original"}, "configuration"));
}

Poly load_poly(const Json& j) {
  return io::poly_from_json(locate(
      j, "terms", {"psi", "normal_form", "polynomial", "matroid_polynomial", "psi_m_k"},
      "polynomial"));
}

ContactCert load_cert(const Json& j) {
  return io::cert_from_json(locate(j, "ell", {"cert"}, "certificate"));
}

Ideal load_ideal(const Json& j) {
  return io::ideal_from_json(locate(j, "gens", {"ideal"}, "ideal"));
}

SymbolicForm load_form(const Json& j) {
  return io::form_from_json(locate(j, "entries", {"form"}, "symbolic form"));
}

GraphSpec load_graph(const Json& j) {
  return io::graph_from_json(locate(j, "edges", {"graph"}, "graph"));
}

}  // namespace cfgpoly::cli
