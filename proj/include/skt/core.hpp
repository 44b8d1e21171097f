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

// Single-value kernels for the Smarandache (Kempner) function
//
//   S(n) = min { m >= 1 : n | m! }
//
// S is evaluated through the factorization of n: for n = prod p_i^a_i,
// S(n) = max_i S(p_i^a_i), and S(p^a) is the least m whose factorial holds
// at least a copies of p (Legendre's formula).

#pragma once

#include <cstdint>
#include <vector>

#include "skt/convention.hpp"

namespace skt {

using uint128 = unsigned __int128;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes. 1 factors as {}.
struct Factorization {
  std::vector<PrimePower> factors;

  // Product of prime^exponent; saturates at 2^128 - 1 on overflow.
  uint128 product() const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

// Trial division followed by a fixed-seed Pollard-Brent splitter.
// Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

// Exponent of p in m!. Throws std::invalid_argument for p < 2.
std::uint64_t legendre_valuation(std::uint64_t m, std::uint64_t p);

// S(p^a): smallest m with legendre_valuation(m, p) >= a. Always a multiple
// of p and at most a * p.
//
// Throws std::invalid_argument if a == 0 or p is not prime, and
// std::overflow_error if a * p does not fit in 64 bits.
std::uint64_t s_prime_power(std::uint64_t p, std::uint32_t a);

// Definition-literal S(n): walks m = 1, 2, ... dividing the cofactor of n
// by gcd(cofactor, m) until nothing is left. O(S(n)) gcds; meant as an
// oracle for n up to about 10^6.
std::uint64_t s_naive(std::uint64_t n, Convention conv = Convention::paper());

// S(n) via factorization. Agrees with s_naive wherever both run.
std::uint64_t s(std::uint64_t n, Convention conv = Convention::paper());

// True iff n | m!, decided per prime factor with Legendre valuations.
bool divides_factorial(const Factorization& n, std::uint64_t m);
bool divides_factorial(std::uint64_t n, std::uint64_t m);

namespace detail {

// s_prime_power without the primality / overflow checks. Callers guarantee
// p prime, a >= 1 and a * p < 2^64 (true whenever p^a < 2^64).
std::uint64_t s_prime_power_unchecked(std::uint64_t p, std::uint32_t a) noexcept;

std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace detail

}  // namespace skt
