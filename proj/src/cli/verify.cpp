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

#include <ostream>
#include <stdexcept>

#include "skt/cli.hpp"
#include "skt/oracle.hpp"

namespace skt::cli {

std::uint64_t VerifyReport::total_mismatches() const noexcept {
  std::uint64_t total = 0;
  for (const auto& g : gaps) total += g.mismatches;
  return total;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.step == 0) throw std::invalid_argument("verify: --step must be positive");
  if (opts.max_x > kVerifyMaxX) throw std::invalid_argument("verify: --max-x exceeds memory budget");
  for (std::uint64_t gap : opts.gaps) {
    if (gap == 0 || gap % 2 != 0) throw std::invalid_argument("verify: gaps must be even and >= 2");
  }

  CountOptions repaired;
  repaired.threads = opts.threads;
  repaired.segment_size = opts.segment_size;
  CountOptions as_printed = repaired;
  as_printed.bounds = SumBounds::AsPrinted;

  VerifyReport report;
  for (std::uint64_t gap : opts.gaps) {
    const std::uint64_t n = gap / 2;
    const auto formula = pair_count_table(opts.max_x, n, Convention::formula(), repaired);
    const auto literal = pair_count_table(opts.max_x, n, Convention::paper(), as_printed);
    const auto truth = oracle::oracle_pair_count_table(opts.max_x, n);

    GapSummary summary{gap, 0, 0};
    for (std::uint64_t x = 2; x <= opts.max_x; x += opts.step) {
      ++summary.checked;
      if (formula[x] != truth[x]) {
        ++summary.mismatches;
        report.counterexamples.push_back({gap, x, formula[x], truth[x]});
      }
      const auto excess = static_cast<std::int64_t>(literal[x]) - static_cast<std::int64_t>(truth[x]);
      if (excess == 0) continue;
      auto& runs = report.literal_discrepancies;
      if (!runs.empty() && runs.back().gap == gap && runs.back().excess == excess &&
          runs.back().x_to + opts.step == x) {
        runs.back().x_to = x;
      } else {
        runs.push_back({gap, x, x, excess});
      }
    }
    report.gaps.push_back(summary);
  }
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  out << "gap,checked,mismatches\n";
  for (const auto& g : report.gaps) out << g.gap << ',' << g.checked << ',' << g.mismatches << '\n';
  if (!report.counterexamples.empty()) {
    out << "counterexamples\n";
    out << "gap,x,formula,oracle\n";
    for (const auto& c : report.counterexamples) {
      out << c.gap << ',' << c.x << ',' << c.formula << ',' << c.oracle << '\n';
    }
  }
  out << report.total_mismatches() << " mismatches\n";
  out << "paper-literal discrepancies (sum from j=1, S(1)=1)\n";
  out << "gap,x_from,x_to,excess\n";
  for (const auto& d : report.literal_discrepancies) {
    out << d.gap << ',' << d.x_from << ',' << d.x_to << ',' << (d.excess > 0 ? "+" : "") << d.excess << '\n';
  }
}

}  // namespace skt::cli
