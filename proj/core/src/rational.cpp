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

#include "cfgpoly/rational.hpp"

#include <cctype>

#include "cfgpoly/error.hpp"

namespace cfgpoly {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kVarSetMismatch: return "VarSetMismatch";
    case Errc::kDuplicateLabel: return "DuplicateLabel";
    case Errc::kTooManyBases: return "TooManyBases";
    case Errc::kDisconnectedGraph: return "DisconnectedGraph";
    case Errc::kNotAConfigurationForm: return "NotAConfigurationForm";
    case Errc::kWrongRank: return "WrongRank";
    case Errc::kNotReduced: return "NotReduced";
    case Errc::kUnsupportedShape: return "UnsupportedShape";
    case Errc::kZeroParameter: return "ZeroParameter";
    case Errc::kZeroM: return "ZeroM";
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(Errc::kInvalidInput, "malformed rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  BigInt n(strip_plus(num), 10);
  BigInt d(strip_plus(den), 10);
  if (d == 0) {
    throw Error(Errc::kInvalidInput, "zero denominator: '" + std::string(text) + "'");
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

}  // namespace cfgpoly
