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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "skt/convention.hpp"

namespace skt {

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;

// Dense S(j) for j in [lo, hi].
struct STable {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  Convention conv{};
  std::vector<std::uint64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::uint64_t at(std::uint64_t j) const;  // throws std::out_of_range

  friend bool operator==(const STable&, const STable&) = default;
};

// Segmented S sieve. Holds the primes up to sqrt(max_hi); fill() is const
// and may be called concurrently on disjoint output ranges.
//
// For each segment, every prime p <= sqrt(hi) is divided out of its
// multiples, the exponent turned into a candidate S(p^e), and whatever
// cofactor survives the sweep is a single prime > sqrt(hi) that stands for
// itself.
class SegmentSieve {
 public:
  SegmentSieve(std::uint64_t max_hi, Convention conv);

  // out.size() must equal hi - lo + 1; requires 1 <= lo <= hi <= max_hi.
  void fill(std::uint64_t lo, std::uint64_t hi, std::span<std::uint64_t> out) const;

  std::uint64_t max_hi() const noexcept { return max_hi_; }
  Convention convention() const noexcept { return conv_; }

 private:
  std::uint64_t max_hi_;
  Convention conv_;
  std::vector<std::uint32_t> primes_;
};

// STable for [lo, hi]. threads == 0 means one per hardware thread; the
// result does not depend on the thread count.
// Throws std::invalid_argument for lo == 0, lo > hi or segment_size == 0.
STable s_range(std::uint64_t lo, std::uint64_t hi, Convention conv,
               std::size_t segment_size = kDefaultSegmentSize, unsigned threads = 1);

// Cache file: "SKT1", u32 version, u64 lo, u64 hi, u8 convention,
// (hi - lo + 1) u64 values, u64 FNV-1a of everything before it.
// All integers little-endian.
inline constexpr std::uint32_t kSTableVersion = 1;

class STableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class STableIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                      std::uint64_t state = 0xcbf29ce484222325ULL) noexcept;

void write_stable(std::ostream& os, const STable& table);
STable read_stable(std::istream& is);

void save_stable(const std::filesystem::path& path, const STable& table);
STable load_stable(const std::filesystem::path& path);

}  // namespace skt
