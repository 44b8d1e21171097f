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

// Ground truth for the census: a plain segmented sieve of Eratosthenes and
// the definition-literal S. Nothing here calls the S kernels.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace skt::oracle {

inline constexpr std::size_t kDefaultSieveMemoryCap = std::size_t{1} << 30;

// Odd-only packed primality flags for [0, limit]. Bit i stands for 2i + 1.
class PrimeSieve {
 public:
  PrimeSieve() = default;

  std::uint64_t limit() const noexcept { return limit_; }

  // Throws std::out_of_range for n > limit.
  bool is_prime(std::uint64_t n) const;

  // pi(limit).
  std::uint64_t count() const noexcept;

  std::vector<std::uint64_t> primes() const;

  std::size_t memory_bytes() const noexcept { return words_.size() * sizeof(std::uint64_t); }

 private:
  friend PrimeSieve sieve_primes(std::uint64_t, std::size_t);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;
};

// Throws std::length_error when the bitset would exceed memory_cap bytes.
PrimeSieve sieve_primes(std::uint64_t limit,
                        std::size_t memory_cap = kDefaultSieveMemoryCap);

// #{p : p and p + 2n prime, p + 2n <= x}. Throws for half_gap == 0.
std::uint64_t oracle_pair_count(std::uint64_t x, std::uint64_t half_gap);

std::uint64_t oracle_pi(std::uint64_t x);

// S(n) with S(1) = 1 for n in [1, 10^6]; throws std::out_of_range otherwise.
inline constexpr std::uint64_t kOracleSMax = 1'000'000;
std::uint64_t oracle_s(std::uint64_t n);

// counts[x] == oracle_pair_count(x, half_gap) for x in [0, max_x].
std::vector<std::uint64_t> oracle_pair_count_table(std::uint64_t max_x, std::uint64_t half_gap);

// counts[x] == oracle_pi(x) for x in [0, max_x].
std::vector<std::uint64_t> oracle_pi_table(std::uint64_t max_x);

}  // namespace skt::oracle
