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

#include <cstdint>

#include "input.hpp"

namespace cfgpoly::cli {

struct SuiteOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

// Replays every pinned computation. The report contains no timings, so
// identical options give byte-identical output.
Json verify_paper(const SuiteOptions& opts);

// 64-bit FNV-1a of the text, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace cfgpoly::cli
