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

#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>

#include "skt/core.hpp"

using namespace skt;

namespace {

// S(n) straight from the definition: first m with m! == 0 (mod n).
std::uint64_t s_by_factorial_residue(std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t f = 1;
  for (std::uint64_t m = 1;; ++m) {
    f = f * m % n;
    if (f == 0) return m;
  }
}

bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::map<std::uint64_t, std::uint32_t> trial_factor(std::uint64_t n) {
  std::map<std::uint64_t, std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  if (n > 1) ++out[n];
  return out;
}

// Lucas-Lehmer: 2^p - 1 is prime iff s_{p-2} == 0, s_0 = 4, s_k = s^2 - 2.
bool lucas_lehmer(unsigned p) {
  const std::uint64_t m = (std::uint64_t{1} << p) - 1;
  std::uint64_t s = 4;
  for (unsigned i = 0; i < p - 2; ++i) {
    s = static_cast<std::uint64_t>((static_cast<uint128>(s) * s + m - 2) % m);
  }
  return s == 0;
}

void check_factorization(std::uint64_t n, const Factorization& f) {
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    CHECK(is_prime(f.factors[i].prime));
    CHECK(f.factors[i].exponent >= 1);
    if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
  }
  CHECK(f.product() == static_cast<uint128>(n));
}

}  // namespace

TEST_CASE("s_naive examples") {
  CHECK(s_naive(4, Convention::paper()) == 4);
  CHECK(s_naive(1, Convention::paper()) == 1);
  CHECK(s_naive(1, Convention::formula()) == 0);
  CHECK(s_naive(6) == 3);
  CHECK(s_naive(10) == 5);
  CHECK(s_naive(8) == 4);
  CHECK(s_naive(9) == 6);
  CHECK_THROWS_AS(s_naive(0), std::invalid_argument);
}

TEST_CASE("s_naive matches the factorial-residue definition") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(s_naive(n) == s_by_factorial_residue(n));
  }
}

TEST_CASE("legendre_valuation") {
  CHECK(legendre_valuation(10, 2) == 8);
  CHECK(legendre_valuation(0, 5) == 0);
  CHECK(legendre_valuation(6, 3) == 2);
  CHECK(legendre_valuation(1, 2) == 0);
  CHECK(legendre_valuation(UINT64_MAX, 2) == UINT64_MAX - 64);  // m - popcount(m)
  CHECK_THROWS_AS(legendre_valuation(10, 1), std::invalid_argument);
  CHECK_THROWS_AS(legendre_valuation(10, 0), std::invalid_argument);

  SUBCASE("exponent in 1*2*...*m by direct factoring") {
    std::map<std::uint64_t, std::uint64_t> acc;
    for (std::uint64_t m = 0; m <= 20; ++m) {
      if (m >= 2)
        for (auto [p, e] : trial_factor(m)) acc[p] += e;
      for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) {
        CHECK(legendre_valuation(m, p) == acc[p]);
      }
    }
  }
}

TEST_CASE("s_prime_power") {
  CHECK(s_prime_power(2, 3) == 4);
  CHECK(s_prime_power(3, 2) == 6);
  CHECK(s_prime_power(2, 1) == 2);
  CHECK(s_prime_power(5, 6) == 25);  // v5(25!) = 6, v5(24!) = 4
  for (std::uint64_t p : {2ULL, 3ULL, 97ULL, 65537ULL, 2305843009213693951ULL}) {
    CHECK(s_prime_power(p, 1) == p);
  }
  CHECK_THROWS_AS(s_prime_power(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(s_prime_power(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(s_prime_power(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(s_prime_power(2305843009213693951ULL, 16), std::overflow_error);

  SUBCASE("matches s_naive on prime powers") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      std::uint64_t q = 1;
      for (std::uint32_t a = 1; q <= 1'000'000 / p; ++a) {
        q *= p;
        CHECK(s_prime_power(p, a) == s_naive(q));
      }
    }
  }

  SUBCASE("minimal and a multiple of p") {
    for (std::uint64_t p : {2, 3, 5, 7, 101}) {
      for (std::uint32_t a = 1; a <= 300; ++a) {
        const std::uint64_t m = s_prime_power(p, a);
        CHECK(m % p == 0);
        CHECK(legendre_valuation(m, p) >= a);
        CHECK(legendre_valuation(m - 1, p) < a);
      }
    }
  }

  SUBCASE("monotone in the exponent") {
    for (std::uint64_t p : {2, 3, 7, 31}) {
      std::uint64_t prev = 0;
      for (std::uint32_t a = 1; a <= 2000; ++a) {
        const std::uint64_t cur = s_prime_power(p, a);
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(lucas_lehmer(61));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(lucas_lehmer(59));
  CHECK_FALSE(is_prime((std::uint64_t{1} << 59) - 1));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(UINT64_MAX));
  // Strong pseudoprimes to small bases.
  CHECK_FALSE(is_prime(2047));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(561));

  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    REQUIRE(is_prime(n) == trial_is_prime(n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() % 10'000'000'000ULL;
    REQUIRE(is_prime(n) == trial_is_prime(n));
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(12) == Factorization{{{2, 2}, {3, 1}}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(9991) == Factorization{{{97, 1}, {103, 1}}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  SUBCASE("agrees with trial division") {
    for (std::uint64_t n = 1; n <= 20'000; ++n) {
      const auto f = factorize(n);
      const auto expect = trial_factor(n);
      REQUIRE(f.factors.size() == expect.size());
      std::size_t i = 0;
      for (auto [p, e] : expect) {
        CHECK(f.factors[i].prime == p);
        CHECK(f.factors[i].exponent == e);
        ++i;
      }
    }
  }

  SUBCASE("invariants on hard inputs") {
    const std::uint64_t hard[] = {4294967291ULL * 4294967279ULL, 2305843009213693951ULL, 18446744073709551557ULL,
                                  UINT64_MAX, 1ULL << 63, 3825123056546413051ULL, 999999000001ULL * 18446ULL,
                                  6700417ULL * 6700417ULL * 409ULL, 4611686014132420609ULL};
    for (std::uint64_t n : hard) {
      check_factorization(n, factorize(n));
    }
  }

  SUBCASE("invariants on random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
      const std::uint64_t n = rng() >> (rng() % 40) | 1;
      check_factorization(n, factorize(n));
    }
  }

  SUBCASE("deterministic") {
    const std::uint64_t n = 4294967291ULL * 4294967279ULL;
    CHECK(factorize(n) == factorize(n));
  }
}

TEST_CASE("s examples") {
  CHECK(s(4) == 4);
  CHECK(s(97) == 97);
  CHECK(s(5000) == s_naive(5000));
  CHECK(s(5000) == 20);
  CHECK(s(1, Convention::paper()) == 1);
  CHECK(s(1, Convention::formula()) == 0);
  CHECK_THROWS_AS(s(0), std::invalid_argument);
  CHECK(s(18446744073709551557ULL) == 18446744073709551557ULL);
  CHECK(s(1ULL << 63) == s_prime_power(2, 63));
}

TEST_CASE("s agrees with s_naive on [1, 5000]") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(s(n, Convention::paper()) == s_naive(n, Convention::paper()));
    REQUIRE(s(n, Convention::formula()) == s_naive(n, Convention::formula()));
  }
}

TEST_CASE("bounds and fixed points") {
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const std::uint64_t v = s(n);
    REQUIRE(v >= 2);
    REQUIRE(v <= n);
    REQUIRE((v == n) == (n == 4 || is_prime(n)));
  }
}

TEST_CASE("minimality via Legendre valuations") {
  auto check = [](std::uint64_t n) {
    const auto f = factorize(n);
    const std::uint64_t v = s(n);
    REQUIRE(divides_factorial(f, v));
    REQUIRE_FALSE(divides_factorial(f, v - 1));
  };
  for (std::uint64_t n = 2; n <= 10'000; ++n) check(n);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) check(rng() % 999'999'999 + 2);
  CHECK(divides_factorial(1, 0));
}
