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
#include <iosfwd>
#include <string>
#include <vector>

#include "skt/census.hpp"

namespace skt::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kIo = 3,
};

// Largest --max-x accepted by `verify`; the sweep keeps O(max_x) tables.
inline constexpr std::uint64_t kVerifyMaxX = 100'000'000;

struct VerifyOptions {
  std::uint64_t max_x = 100'000;
  std::vector<std::uint64_t> gaps{2};
  std::uint64_t step = 1;
  unsigned threads = 1;
  std::size_t segment_size = kDefaultSegmentSize;
};

struct GapSummary {
  std::uint64_t gap;
  std::uint64_t checked;
  std::uint64_t mismatches;
};

struct Counterexample {
  std::uint64_t gap;
  std::uint64_t x;
  std::uint64_t formula;
  std::uint64_t oracle;
};

// Maximal run of consecutive sampled x over which the as-printed,
// S(1) = 1 evaluation differs from the oracle by the same amount.
struct DiscrepancyRun {
  std::uint64_t gap;
  std::uint64_t x_from;
  std::uint64_t x_to;
  std::int64_t excess;

  friend bool operator==(const DiscrepancyRun&, const DiscrepancyRun&) = default;
};

struct VerifyReport {
  std::vector<GapSummary> gaps;
  std::vector<Counterexample> counterexamples;
  std::vector<DiscrepancyRun> literal_discrepancies;

  std::uint64_t total_mismatches() const noexcept;
};

// Samples x = 2, 2 + step, ... <= max_x for every gap. The default
// convention must match the oracle; the literal evaluation is only reported.
// Throws std::invalid_argument on odd or zero gaps, step == 0, or max_x
// above kVerifyMaxX.
VerifyReport run_verify(const VerifyOptions& opts);

void print_verify_report(std::ostream& out, const VerifyReport& report);

// Entry point shared by the skt binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skt::cli
