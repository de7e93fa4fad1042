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

#include <cstddef>
#include <vector>

namespace cfgpoly {

// k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

// Size-k multisets of {0, ..., n-1} as non-decreasing index lists, in
// lexicographic order.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k);

// Binomial coefficient; saturates at SIZE_MAX instead of overflowing.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace cfgpoly
