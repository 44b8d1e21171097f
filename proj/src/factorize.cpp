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

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "modarith.hpp"
#include "skt/core.hpp"

namespace skt {

namespace {

// Trial division runs over 2, 3 and 6k +- 1 up to this bound. Past it,
// cofactors go to Miller-Rabin and Pollard-Brent.
constexpr std::uint64_t kTrialDivisionBound = 1 << 12;

constexpr std::uint64_t kRhoSeed = 0x5eed'f00d'cafe'0001ULL;

std::uint64_t absdiff(std::uint64_t a, std::uint64_t b) noexcept { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho with batched gcds. n must be odd and
// composite. Returns a nontrivial divisor.
std::uint64_t rho_split(std::uint64_t n, std::mt19937_64& rng) {
  constexpr std::uint64_t kBatch = 128;
  for (;;) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t y = rng() % n;
    auto step = [&](std::uint64_t v) { return detail::addmod(detail::mulmod(v, v, n), c, n); };

    std::uint64_t g = 1, q = 1, x = 0, ys = 0;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          q = detail::mulmod(q, absdiff(x, y), n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = step(ys);
        g = std::gcd(absdiff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");

  std::vector<std::uint64_t> primes;
  auto strip = [&](std::uint64_t d) {
    while (n % d == 0) {
      n /= d;
      primes.push_back(d);
    }
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= kTrialDivisionBound && d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }

  if (n > 1) {
    std::mt19937_64 rng(kRhoSeed);
    std::vector<std::uint64_t> pending{n};
    while (!pending.empty()) {
      const std::uint64_t m = pending.back();
      pending.pop_back();
      if (m < kTrialDivisionBound * kTrialDivisionBound || is_prime(m)) {
        primes.push_back(m);
        continue;
      }
      const std::uint64_t d = rho_split(m, rng);
      pending.push_back(d);
      pending.push_back(m / d);
    }
  }

  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (std::uint64_t p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

}  // namespace skt
