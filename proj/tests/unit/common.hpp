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

#include <gtest/gtest.h>

#include <initializer_list>
#include <ostream>

#include "cfgpoly/configuration.hpp"
#include "cfgpoly/error.hpp"
#include "cfgpoly/matrix.hpp"
#include "cfgpoly/poly.hpp"
#include "oracles.hpp"

namespace cfgpoly {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace cfgpoly

namespace cfgpoly::testing {

// One-based variable access: v(y, 1) is y1.
inline Poly v(const VarSet& vars, std::size_t i) { return Poly::variable(vars, i - 1); }

inline RatMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  return RatMatrix::from_ints(rows);
}

inline Configuration cfg(std::initializer_list<std::initializer_list<long>> rows) {
  return Configuration(RatMatrix::from_ints(rows));
}

inline RatMatrix from_mat(const oracle::Mat& m) {
  return RatMatrix::stack(m, m.empty() ? 0 : m[0].size());
}

inline Rat q(const char* text) { return parse_rat(text); }

}  // namespace cfgpoly::testing

#define EXPECT_ERRC(stmt, errc)                                          \
  do {                                                                   \
    try {                                                                \
      stmt;                                                              \
      ADD_FAILURE() << "expected " #errc " from " #stmt;                 \
    } catch (const ::cfgpoly::Error& e) {                                \
      EXPECT_EQ(e.code(), ::cfgpoly::Errc::errc) << e.what();            \
    }                                                                    \
  } while (0)
