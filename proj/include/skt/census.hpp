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

// Exact prime-pair and prime counts from fixed points of S.
//
// S(k) <= k for k >= 2 with equality exactly at k = 4 and at primes, so
//
//   floor( S(j) S(j+2n) / (j (j+2n)) )
//
// is an indicator of "j and j+2n are both fixed points". Summing it over
// j <= x - 2n counts pairs (p, p+2n) whose larger member is <= x, except
// for the fixed point 4 (which spuriously pairs with 2 when n = 1) and
// the j = 1 term when S(1) = 1.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "skt/convention.hpp"
#include "skt/s_table.hpp"

namespace skt {

// Where summations start.
enum class SumBounds {
  Repaired,   // Convention::sum_start()
  AsPrinted,  // always j = 1, whatever S(1) is
};

struct CountOptions {
  SumBounds bounds = SumBounds::Repaired;
  bool verify = false;  // also compute the sieve oracle
  unsigned threads = 1;  // 0 = hardware concurrency
  std::size_t segment_size = kDefaultSegmentSize;
};

struct PairCountQuery {
  std::uint64_t x = 0;          // inclusive bound on the larger member
  std::uint64_t half_gap = 1;   // pairs are (p, p + 2 * half_gap)
  Convention conv = Convention::formula();
};

struct CountReport {
  std::uint64_t formula_count = 0;
  std::optional<std::uint64_t> oracle_count;
  std::int64_t correction_applied = 0;
  std::uint64_t terms_evaluated = 0;
  std::chrono::nanoseconds elapsed{0};

  // False only when an oracle was computed and disagrees.
  bool matches() const noexcept {
    return !oracle_count || *oracle_count == formula_count;
  }
};

// Indicator term, evaluated by the equality test s_j == j && s_j2n == j+2n.
// Throws std::invalid_argument for j == 0.
std::uint32_t pair_term(std::uint64_t j, std::uint64_t half_gap,
                        std::uint64_t s_j, std::uint64_t s_j2n);

// The same term by literal 128-bit floor division.
std::uint64_t pair_term_exact(std::uint64_t j, std::uint64_t half_gap,
                              std::uint64_t s_j, std::uint64_t s_j2n);

// Twin pairs (p, p+2) with p + 2 <= x. The (2, 4) term is removed once
// x >= 4, when it lies inside the sum.
CountReport count_twin(std::uint64_t x, Convention conv = Convention::formula(),
                       const CountOptions& opts = {});

// Pairs (p, p + 2n) with p + 2n <= x. half_gap == 1 delegates to count_twin.
// Throws std::invalid_argument for half_gap == 0.
CountReport count_pairs(const PairCountQuery& q, const CountOptions& opts = {});

// pi(x) = sum_{j} floor(S(j) / j) - [x >= 4]. Summation bounds follow the
// convention; opts.bounds is not used.
CountReport count_primes(std::uint64_t x, Convention conv = Convention::formula(),
                         const CountOptions& opts = {});

struct TraceRow {
  std::uint64_t j;
  std::uint64_t s_j;
  std::uint64_t s_j2n;
  std::uint32_t term;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

// Per-term view of the pair sum over j in [lo, hi]. Uses q.conv for S(1)
// regardless of summation bounds. Requires 1 <= lo <= hi <= x - 2n.
std::vector<TraceRow> trace_terms(const PairCountQuery& q, std::uint64_t lo,
                                  std::uint64_t hi);

// counts[x] == count_pairs({x, half_gap, conv}, opts).formula_count for every
// x in [0, max_x], from a single S table. Memory is O(max_x).
std::vector<std::uint64_t> pair_count_table(std::uint64_t max_x, std::uint64_t half_gap,
                                            Convention conv, const CountOptions& opts = {});

// counts[x] == count_primes(x, conv).formula_count for x in [0, max_x].
std::vector<std::uint64_t> prime_count_table(std::uint64_t max_x, Convention conv,
                                             const CountOptions& opts = {});

}  // namespace skt
