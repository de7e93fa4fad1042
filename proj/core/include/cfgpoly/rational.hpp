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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cfgpoly {

// Exact rational. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q" or "p" with an optional leading sign. Throws
// Error(kInvalidInput) on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

// Canonical decimal form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace cfgpoly
