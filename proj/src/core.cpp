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

#include "skt/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "modarith.hpp"

namespace skt {

namespace {

// First twelve primes; as Miller-Rabin witnesses they are deterministic
// below 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) noexcept {
  std::uint64_t x = detail::powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = detail::mulmod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

uint128 Factorization::product() const noexcept {
  constexpr uint128 kMax = ~uint128{0};
  uint128 acc = 1;
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (acc > kMax / p) return kMax;
      acc *= p;
    }
  }
  return acc;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;

  std::uint64_t d = n - 1;
  const int r = std::countr_zero(d);
  d >>= r;
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a, d, r)) return false;
  }
  return true;
}

std::uint64_t legendre_valuation(std::uint64_t m, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("legendre_valuation: p must be >= 2");
  // floor(m / p^k) == floor(floor(m / p^(k-1)) / p), so p^k is never formed.
  std::uint64_t total = 0;
  while (m >= p) {
    m /= p;
    total += m;
  }
  return total;
}

namespace detail {

std::uint64_t s_prime_power_unchecked(std::uint64_t p, std::uint32_t a) noexcept {
  if (a == 1) return p;
  // Smallest multiplier k in [1, a] with v_p((k p)!) >= a.
  std::uint64_t lo = 1;
  std::uint64_t hi = a;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (legendre_valuation(mid * p, p) >= a)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo * p;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (static_cast<uint128>(r) * r > n) --r;
  while (static_cast<uint128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

std::uint64_t s_prime_power(std::uint64_t p, std::uint32_t a) {
  if (a == 0) throw std::invalid_argument("s_prime_power: exponent must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("s_prime_power: " + std::to_string(p) + " is not prime");
  if (static_cast<uint128>(a) * p > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("s_prime_power: a * p exceeds 64 bits");
  return detail::s_prime_power_unchecked(p, a);
}

std::uint64_t s_naive(std::uint64_t n, Convention conv) {
  if (n == 0) throw std::invalid_argument("s_naive: n must be >= 1");
  if (n == 1) return conv.s_one();
  // Multiplying m into the factorial cancels exactly gcd(rest, m) of what
  // is still owed.
  std::uint64_t rest = n;
  for (std::uint64_t m = 2;; ++m) {
    rest /= std::gcd(rest, m);
    if (rest == 1) return m;
  }
}

std::uint64_t s(std::uint64_t n, Convention conv) {
  if (n == 0) throw std::invalid_argument("s: n must be >= 1");
  if (n == 1) return conv.s_one();
  std::uint64_t best = 0;
  for (const auto& [p, e] : factorize(n).factors) {
    best = std::max(best, detail::s_prime_power_unchecked(p, e));
  }
  return best;
}

bool divides_factorial(const Factorization& n, std::uint64_t m) {
  return std::all_of(n.factors.begin(), n.factors.end(), [m](const PrimePower& pp) {
    return legendre_valuation(m, pp.prime) >= pp.exponent;
  });
}

bool divides_factorial(std::uint64_t n, std::uint64_t m) {
  return divides_factorial(factorize(n), m);
}

}  // namespace skt
