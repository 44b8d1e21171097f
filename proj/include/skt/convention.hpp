// Copyright 2026 The skt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace skt {

// Value assigned to S(1). The enumerator value is also the S(1) value and
// the convention byte written into table caches.
enum class SOfOne : std::uint8_t {
  FormulaConsistent = 0,
  PaperLiteral = 1,
};

// Selects how S(1) is treated. Point queries usually want PaperLiteral
// (S(1) = 1); summations either use FormulaConsistent (S(1) = 0, sums from
// j = 1) or PaperLiteral with the lower bound moved to j = 2. Both give the
// same counts.
struct Convention {
  SOfOne s_of_one = SOfOne::FormulaConsistent;

  static constexpr Convention paper() noexcept { return {SOfOne::PaperLiteral}; }
  static constexpr Convention formula() noexcept { return {SOfOne::FormulaConsistent}; }

  constexpr std::uint64_t s_one() const noexcept {
    return static_cast<std::uint64_t>(s_of_one);
  }

  // Lowest summation index for which the counting formulas are exact.
  constexpr std::uint64_t sum_start() const noexcept {
    return s_of_one == SOfOne::PaperLiteral ? 2 : 1;
  }

  friend constexpr bool operator==(Convention, Convention) = default;
};

constexpr std::string_view to_string(SOfOne s) noexcept {
  return s == SOfOne::PaperLiteral ? "paper" : "formula";
}

// Accepts "paper" / "formula" (the CLI spellings).
constexpr std::optional<Convention> parse_convention(std::string_view name) noexcept {
  if (name == "paper") return Convention::paper();
  if (name == "formula") return Convention::formula();
  return std::nullopt;
}

}  // namespace skt
