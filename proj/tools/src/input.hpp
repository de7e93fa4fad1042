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

#pragma once

#include <string>

#include "cfgpoly/classify.hpp"
#include "cfgpoly/io.hpp"

namespace cfgpoly::cli {

using io::Json;

// Parses a JSON document from a file, or from stdin when path is "-".
Json read_json(const std::string& path);

// Each loader accepts the bare object or any report that embeds one, so the
// output of one command can be piped into the next.
Configuration load_config(const Json& j);
Poly load_poly(const Json& j);
ContactCert load_cert(const Json& j);
Ideal load_ideal(const Json& j);
SymbolicForm load_form(const Json& j);
GraphSpec load_graph(const Json& j);

}  // namespace cfgpoly::cli
