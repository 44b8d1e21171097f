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

#include "skt/s_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "skt/core.hpp"

namespace skt {

std::uint64_t STable::at(std::uint64_t j) const {
  if (j < lo || j > hi) throw std::out_of_range("STable::at: " + std::to_string(j) + " outside table");
  return values[j - lo];
}

SegmentSieve::SegmentSieve(std::uint64_t max_hi, Convention conv) : max_hi_(max_hi), conv_(conv) {
  const std::uint64_t root = detail::isqrt(max_hi);
  std::vector<bool> composite(root + 1, false);
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (composite[i]) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t k = i * i; k <= root; k += i) composite[k] = true;
  }
}

void SegmentSieve::fill(std::uint64_t lo, std::uint64_t hi, std::span<std::uint64_t> out) const {
  if (lo == 0 || lo > hi || hi > max_hi_) throw std::out_of_range("SegmentSieve::fill: bad range");
  const std::uint64_t len = hi - lo + 1;
  if (out.size() != len) throw std::invalid_argument("SegmentSieve::fill: output size mismatch");

  std::vector<std::uint64_t> rest(len);
  std::iota(rest.begin(), rest.end(), lo);
  std::fill(out.begin(), out.end(), 0);

  for (std::uint64_t p : primes_) {
    if (p * p > hi) break;
    const std::uint64_t offset = (p - lo % p) % p;
    if (offset > hi - lo) continue;
    for (std::uint64_t i = offset;; i += p) {
      std::uint64_t r = rest[i];
      std::uint32_t e = 0;
      do {
        r /= p;
        ++e;
      } while (r % p == 0);
      rest[i] = r;
      out[i] = std::max(out[i], detail::s_prime_power_unchecked(p, e));
      if (len - 1 - i < p) break;
    }
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    if (rest[i] > 1) out[i] = std::max(out[i], rest[i]);
  }
  if (lo == 1) out[0] = conv_.s_one();
}

STable s_range(std::uint64_t lo, std::uint64_t hi, Convention conv, std::size_t segment_size,
               unsigned threads) {
  if (lo == 0) throw std::invalid_argument("s_range: lo must be >= 1");
  if (lo > hi) throw std::invalid_argument("s_range: lo > hi");
  if (segment_size == 0) throw std::invalid_argument("s_range: segment_size must be positive");

  STable table{lo, hi, conv, std::vector<std::uint64_t>(hi - lo + 1)};
  const SegmentSieve sieve(hi, conv);

  const std::uint64_t len = hi - lo + 1;
  const std::uint64_t segments = (len - 1) / segment_size + 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, segments));

  // Segment s covers [lo + s * size, ...]; worker w takes s = w, w + T, ...
  // Every output element is written by exactly one worker.
  auto run = [&](unsigned w) {
    std::span<std::uint64_t> out(table.values);
    for (std::uint64_t s = w; s < segments; s += workers) {
      const std::uint64_t begin = s * segment_size;
      const std::uint64_t count = std::min<std::uint64_t>(segment_size, len - begin);
      sieve.fill(lo + begin, lo + begin + count - 1, out.subspan(begin, count));
    }
  };

  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return table;
}

}  // namespace skt
