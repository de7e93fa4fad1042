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
#include <random>
#include <string>
#include <vector>

#include "input.hpp"

namespace cfgpoly::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

Json cmd_psi(const std::string& config);
Json cmd_psi_basis(const std::string& config);
Json cmd_matroid_poly(const std::string& config);
Json cmd_kirchhoff(const std::string& graph);
Json cmd_hadamard(const std::string& config, unsigned s);
Json cmd_filtration(const std::string& config, unsigned s_max);
Json cmd_reduce(const std::string& config);
Json cmd_drop_var(const std::string& config);
Json cmd_check_cert(const std::string& phi, const std::string& psi, const std::string& cert);
Json cmd_classify(const std::string& config, bool ideal_cross_check);
Json cmd_minors_ideal(const std::string& config, const std::string& form, bool reduced);
Json cmd_groebner(const std::string& ideal, const std::string& order, std::size_t budget);
Json cmd_ideal_eq(const std::string& a, const std::string& b);
Json cmd_ideal_intersect(const std::string& a, const std::string& b);

Json cmd_family_psi_m(const std::string& m);
Json cmd_family_verify(const std::string& m_list, unsigned jobs, std::uint64_t seed,
                       bool timings);
Json cmd_family_tower(const std::string& m, std::size_t k);

// Comma separated rationals, e.g. "1,2,3,1/2,5".
std::vector<Rat> parse_rat_list(const std::string& text);

Rat random_nonzero_rat(std::mt19937_64& rng);

// The per-m family checks shared with verify-paper. Each entry of "checks"
// carries a boolean "pass".
struct FamilyCheck {
  Rat m;
  Json checks;
  FamilyEvidence evidence;
};
FamilyCheck family_checks(const Rat& m, std::uint64_t seed, std::size_t tuples = 25,
                          std::size_t max_k = 3);

}  // namespace cfgpoly::cli
