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

#include "skt/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "skt/core.hpp"
#include "skt/oracle.hpp"

namespace skt {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t lower_bound_for(Convention conv, SumBounds bounds) noexcept {
  return bounds == SumBounds::AsPrinted ? 1 : conv.sum_start();
}

unsigned resolve_threads(unsigned threads) {
  return threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
}

// Sum of pair_term(j, n, S(j), S(j + 2n)) over j in [a, b], streaming S in
// segments. The buffer holds S over [window_lo, next): at most 2n values
// carried over plus one fresh segment.
std::uint64_t stream_pair_terms(const SegmentSieve& sieve, std::uint64_t a, std::uint64_t b,
                                std::uint64_t half_gap, std::size_t segment_size) {
  const std::uint64_t gap = 2 * half_gap;
  std::vector<std::uint64_t> buf;
  std::uint64_t window_lo = a;
  std::uint64_t next = a;
  std::uint64_t sum = 0;
  for (std::uint64_t j = a; j <= b;) {
    buf.erase(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(j - window_lo));
    window_lo = j;
    const std::uint64_t seg_hi = std::min(b + gap, next + segment_size - 1);
    const std::size_t old = buf.size();
    buf.resize(old + (seg_hi - next + 1));
    sieve.fill(next, seg_hi, std::span(buf).subspan(old));
    next = seg_hi + 1;
    for (; j <= b && j + gap < next; ++j) {
      sum += pair_term(j, half_gap, buf[j - window_lo], buf[j + gap - window_lo]);
    }
  }
  return sum;
}

// Splits [a, b] into contiguous chunks, one per worker, and adds the
// per-chunk results in chunk order.
template <typename ChunkFn>
std::uint64_t reduce_chunks(std::uint64_t a, std::uint64_t b, unsigned threads, ChunkFn fn) {
  const std::uint64_t len = b - a + 1;
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), len));
  if (workers <= 1) return fn(a, b);

  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t per = len / workers;
    const std::uint64_t extra = len % workers;
    std::uint64_t lo = a;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t hi = lo + per + (w < extra ? 1 : 0) - 1;
      pool.emplace_back([&partial, &fn, w, lo, hi] { partial[w] = fn(lo, hi); });
      lo = hi + 1;
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : partial) total += v;
  return total;
}

CountReport count_pairs_impl(const PairCountQuery& q, const CountOptions& opts) {
  const auto started = Clock::now();
  if (opts.segment_size == 0) throw std::invalid_argument("count: segment_size must be positive");

  CountReport report;
  const std::uint64_t gap = 2 * q.half_gap;
  const std::uint64_t start = lower_bound_for(q.conv, opts.bounds);
  std::uint64_t sum = 0;
  if (q.x >= gap && q.x - gap >= start) {
    const std::uint64_t end = q.x - gap;
    const SegmentSieve sieve(q.x, q.conv);
    sum = reduce_chunks(start, end, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      return stream_pair_terms(sieve, lo, hi, q.half_gap, opts.segment_size);
    });
    report.terms_evaluated = end - start + 1;
  }
  // Only n = 1 can meet the fixed point 4 from below: (2, 4).
  if (q.half_gap == 1 && q.x >= 4) report.correction_applied = -1;
  report.formula_count = sum - (report.correction_applied == -1 ? 1 : 0);

  if (opts.verify) report.oracle_count = oracle::oracle_pair_count(q.x, q.half_gap);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
  return report;
}

}  // namespace

std::uint32_t pair_term(std::uint64_t j, std::uint64_t half_gap, std::uint64_t s_j, std::uint64_t s_j2n) {
  if (j == 0) throw std::invalid_argument("pair_term: j must be >= 1");
  const uint128 partner = static_cast<uint128>(j) + 2 * static_cast<uint128>(half_gap);
  return (s_j == j && s_j2n == partner) ? 1 : 0;
}

std::uint64_t pair_term_exact(std::uint64_t j, std::uint64_t half_gap, std::uint64_t s_j,
                              std::uint64_t s_j2n) {
  if (j == 0) throw std::invalid_argument("pair_term_exact: j must be >= 1");
  const uint128 partner = static_cast<uint128>(j) + 2 * static_cast<uint128>(half_gap);
  const uint128 num = static_cast<uint128>(s_j) * s_j2n;
  // j * (j + 2n) can exceed 128 bits only when j + 2n does not fit in 64;
  // the numerator is then below the denominator.
  if (partner >> 64) return 0;
  return static_cast<std::uint64_t>(num / (static_cast<uint128>(j) * partner));
}

CountReport count_twin(std::uint64_t x, Convention conv, const CountOptions& opts) {
  return count_pairs_impl({x, 1, conv}, opts);
}

CountReport count_pairs(const PairCountQuery& q, const CountOptions& opts) {
  if (q.half_gap == 0) throw std::invalid_argument("count_pairs: half_gap must be >= 1");
  if (q.half_gap == 1) return count_twin(q.x, q.conv, opts);
  if (q.half_gap > (std::uint64_t{1} << 62)) throw std::invalid_argument("count_pairs: gap too large");
  return count_pairs_impl(q, opts);
}

CountReport count_primes(std::uint64_t x, Convention conv, const CountOptions& opts) {
  const auto started = Clock::now();
  if (opts.segment_size == 0) throw std::invalid_argument("count_primes: segment_size must be positive");

  CountReport report;
  const std::uint64_t start = conv.sum_start();
  std::uint64_t sum = 0;
  if (x >= start) {
    const SegmentSieve sieve(x, conv);
    sum = reduce_chunks(start, x, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t part = 0;
      std::vector<std::uint64_t> buf;
      for (std::uint64_t seg = lo; seg <= hi;) {
        const std::uint64_t seg_hi = std::min<std::uint64_t>(hi, seg + opts.segment_size - 1);
        buf.resize(seg_hi - seg + 1);
        sieve.fill(seg, seg_hi, buf);
        for (std::uint64_t i = 0; i < buf.size(); ++i) part += buf[i] / (seg + i);
        if (seg_hi == hi) break;
        seg = seg_hi + 1;
      }
      return part;
    });
    report.terms_evaluated = x - start + 1;
  }
  // S(4) = 4 although 4 is composite.
  if (x >= 4) report.correction_applied = -1;
  report.formula_count = sum - (x >= 4 ? 1 : 0);

  if (opts.verify) report.oracle_count = oracle::oracle_pi(x);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
  return report;
}

std::vector<TraceRow> trace_terms(const PairCountQuery& q, std::uint64_t lo, std::uint64_t hi) {
  if (q.half_gap == 0) throw std::invalid_argument("trace_terms: half_gap must be >= 1");
  if (lo == 0 || lo > hi) throw std::invalid_argument("trace_terms: window must satisfy 1 <= lo <= hi");
  const std::uint64_t gap = 2 * q.half_gap;
  if (q.x < gap || hi > q.x - gap) throw std::invalid_argument("trace_terms: window exceeds x - 2n");

  const STable table = s_range(lo, hi + gap, q.conv);
  std::vector<TraceRow> rows;
  rows.reserve(hi - lo + 1);
  for (std::uint64_t j = lo; j <= hi; ++j) {
    const std::uint64_t a = table.values[j - lo];
    const std::uint64_t b = table.values[j + gap - lo];
    rows.push_back({j, a, b, pair_term(j, q.half_gap, a, b)});
  }
  return rows;
}

std::vector<std::uint64_t> pair_count_table(std::uint64_t max_x, std::uint64_t half_gap, Convention conv,
                                            const CountOptions& opts) {
  if (half_gap == 0) throw std::invalid_argument("pair_count_table: half_gap must be >= 1");
  std::vector<std::uint64_t> counts(max_x + 1, 0);
  const std::uint64_t gap = 2 * half_gap;
  const std::uint64_t start = lower_bound_for(conv, opts.bounds);
  if (max_x < gap + start) return counts;

  const STable table = s_range(1, max_x, conv, opts.segment_size, opts.threads);
  std::uint64_t running = 0;
  for (std::uint64_t x = gap + start; x <= max_x; ++x) {
    const std::uint64_t j = x - gap;
    running += pair_term(j, half_gap, table.values[j - 1], table.values[x - 1]);
    counts[x] = running - (half_gap == 1 && x >= 4 ? 1 : 0);
  }
  return counts;
}

std::vector<std::uint64_t> prime_count_table(std::uint64_t max_x, Convention conv, const CountOptions& opts) {
  std::vector<std::uint64_t> counts(max_x + 1, 0);
  const std::uint64_t start = conv.sum_start();
  if (max_x < start) return counts;

  const STable table = s_range(1, max_x, conv, opts.segment_size, opts.threads);
  std::uint64_t running = 0;
  for (std::uint64_t x = start; x <= max_x; ++x) {
    running += table.values[x - 1] / x;
    counts[x] = running - (x >= 4 ? 1 : 0);
  }
  return counts;
}

}  // namespace skt
