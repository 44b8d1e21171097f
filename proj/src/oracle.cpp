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

#include "skt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "skt/core.hpp"

namespace skt::oracle {

namespace {

// Odd numbers per sieving window (128 KiB of flags).
constexpr std::uint64_t kWindowOdds = std::uint64_t{1} << 17;

std::uint64_t floor_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeSieve::is_prime: " + std::to_string(n) + " > limit");
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  const std::uint64_t i = n / 2;
  return (words_[i / 64] >> (i % 64)) & 1;
}

std::uint64_t PrimeSieve::count() const noexcept {
  std::uint64_t total = limit_ >= 2 ? 1 : 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<std::uint64_t> PrimeSieve::primes() const {
  std::vector<std::uint64_t> out;
  if (limit_ >= 2) out.push_back(2);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(2 * (64 * w + static_cast<std::uint64_t>(std::countr_zero(bits))) + 1);
    }
  }
  return out;
}

PrimeSieve sieve_primes(std::uint64_t limit, std::size_t memory_cap) {
  PrimeSieve sieve;
  sieve.limit_ = limit;
  if (limit < 3) return sieve;

  // Bit i <-> odd number 2i + 1, for i in [1, odd_count).
  const std::uint64_t odd_count = (limit - 1) / 2 + 1;
  const std::uint64_t words = (odd_count + 63) / 64;
  if (words > memory_cap / sizeof(std::uint64_t))
    throw std::length_error("sieve_primes: bitset for limit " + std::to_string(limit) + " exceeds memory cap");
  sieve.words_.assign(words, 0);

  // Base primes by a separate small sieve.
  const std::uint64_t root = floor_sqrt(limit);
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t k = i * i; k <= root; k += 2 * i) small[k] = 0;
  }

  std::vector<char> window(kWindowOdds);
  for (std::uint64_t first = 1; first < odd_count; first += kWindowOdds) {
    const std::uint64_t last = std::min(odd_count, first + kWindowOdds);  // exclusive
    std::fill(window.begin(), window.end(), 1);
    const std::uint64_t lo_num = 2 * first + 1;
    const std::uint64_t hi_num = 2 * (last - 1) + 1;
    for (std::uint64_t p : base) {
      if (p * p > hi_num) break;
      std::uint64_t start = std::max(p * p, (lo_num + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= hi_num; m += 2 * p) window[m / 2 - first] = 0;
    }
    for (std::uint64_t i = first; i < last; ++i) {
      if (window[i - first]) sieve.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return sieve;
}

std::uint64_t oracle_pair_count(std::uint64_t x, std::uint64_t half_gap) {
  if (half_gap == 0) throw std::invalid_argument("oracle_pair_count: half_gap must be >= 1");
  if (half_gap > x / 2) return 0;
  const std::uint64_t gap = 2 * half_gap;
  const PrimeSieve sieve = sieve_primes(x);
  std::uint64_t total = 0;
  for (std::uint64_t p = 2; p + gap <= x; ++p) {
    if (sieve.is_prime(p) && sieve.is_prime(p + gap)) ++total;
  }
  return total;
}

std::uint64_t oracle_pi(std::uint64_t x) { return sieve_primes(x).count(); }

std::uint64_t oracle_s(std::uint64_t n) {
  if (n < 1 || n > kOracleSMax) throw std::out_of_range("oracle_s: n outside [1, 10^6]");
  return s_naive(n, Convention::paper());
}

std::vector<std::uint64_t> oracle_pair_count_table(std::uint64_t max_x, std::uint64_t half_gap) {
  if (half_gap == 0) throw std::invalid_argument("oracle_pair_count_table: half_gap must be >= 1");
  const PrimeSieve sieve = sieve_primes(max_x);
  std::vector<std::uint64_t> counts(max_x + 1, 0);
  for (std::uint64_t x = 1; x <= max_x; ++x) {
    counts[x] = counts[x - 1];
    if (x / 2 >= half_gap + 1 && sieve.is_prime(x) && sieve.is_prime(x - 2 * half_gap)) ++counts[x];
  }
  return counts;
}

std::vector<std::uint64_t> oracle_pi_table(std::uint64_t max_x) {
  const PrimeSieve sieve = sieve_primes(max_x);
  std::vector<std::uint64_t> counts(max_x + 1, 0);
  for (std::uint64_t x = 1; x <= max_x; ++x) counts[x] = counts[x - 1] + (sieve.is_prime(x) ? 1 : 0);
  return counts;
}

}  // namespace skt::oracle
