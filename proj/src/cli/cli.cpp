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

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "skt/cli.hpp"
#include "skt/core.hpp"
#include "skt/oracle.hpp"
#include "skt/s_table.hpp"

namespace skt::cli {

namespace {

// Bound for `s --kernel naive`, whose cost is linear in S(n).
constexpr std::uint64_t kNaiveKernelMax = 1'000'000'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* boolstr(bool b) { return b ? "true" : "false"; }

Convention convention_or_throw(const std::string& name) {
  if (auto conv = parse_convention(name)) return *conv;
  throw UsageError("unknown convention '" + name + "' (expected paper or formula)");
}

struct Window {
  std::uint64_t lo;
  std::uint64_t hi;
};

Window parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--trace expects lo..hi, got '" + text + "'");
  auto number = [&](const std::string& part) {
    std::uint64_t v = 0;
    std::istringstream is(part);
    if (part.empty() || part[0] == '-' || !(is >> v) || !is.eof())
      throw UsageError("--trace expects lo..hi, got '" + text + "'");
    return v;
  };
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

void print_report_row(std::ostream& out, const CountReport& r) {
  out << r.formula_count;
  if (r.oracle_count) out << ',' << *r.oracle_count << ',' << boolstr(r.matches());
}

struct Globals {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t segment_size = kDefaultSegmentSize;

  CountOptions count_options(bool verify) const {
    CountOptions opts;
    opts.verify = verify;
    opts.threads = threads;
    opts.segment_size = segment_size;
    return opts;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smarandache function kernels and exact prime-pair counts", "skt"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--segment-size", g.segment_size, "Sieve segment length in entries")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  // s
  std::uint64_t s_n = 0;
  std::string s_conv = "paper";
  std::string s_kernel = "factor";
  auto* cmd_s = app.add_subcommand("s", "Print S(n)");
  cmd_s->add_option("n", s_n, "Argument")->required();
  cmd_s->add_option("--convention", s_conv, "S(1) convention: paper | formula");
  cmd_s->add_option("--kernel", s_kernel, "naive | factor")->check(CLI::IsMember({"naive", "factor"}));
  cmd_s->callback([&] {
    action = [&] {
      const Convention conv = convention_or_throw(s_conv);
      if (s_n == 0) throw UsageError("n must be >= 1");
      if (s_kernel == "naive" && s_n > kNaiveKernelMax) throw UsageError("naive kernel is limited to n <= 10^9");
      const std::uint64_t value = s_kernel == "naive" ? s_naive(s_n, conv) : s(s_n, conv);
      out << "n,s\n" << s_n << ',' << value << '\n';
      return kOk;
    };
  });

  // twins
  std::uint64_t tw_x = 0;
  bool tw_verify = false;
  std::string tw_trace;
  std::string tw_conv = "formula";
  auto* cmd_twins = app.add_subcommand("twins", "Count twin prime pairs with larger member <= x");
  cmd_twins->add_option("x", tw_x, "Upper bound")->required();
  cmd_twins->add_flag("--verify", tw_verify, "Compare with the sieve oracle");
  cmd_twins->add_option("--trace", tw_trace, "Append per-term rows for j in lo..hi");
  cmd_twins->add_option("--convention", tw_conv, "S(1) convention: paper | formula");
  cmd_twins->callback([&] {
    action = [&] {
      const Convention conv = convention_or_throw(tw_conv);
      std::optional<Window> window;
      if (!tw_trace.empty()) window = parse_window(tw_trace);
      const CountReport r = count_twin(tw_x, conv, g.count_options(tw_verify));
      out << (tw_verify ? "x,t2,oracle,match\n" : "x,t2\n");
      out << tw_x << ',';
      print_report_row(out, r);
      out << '\n';
      if (window) {
        out << "j,s_j,s_j2,term\n";
        for (const auto& row : trace_terms({tw_x, 1, conv}, window->lo, window->hi)) {
          out << row.j << ',' << row.s_j << ',' << row.s_j2n << ',' << row.term << '\n';
        }
      }
      return r.matches() ? kOk : kMismatch;
    };
  });

  // pairs
  std::uint64_t pr_x = 0;
  std::uint64_t pr_gap = 2;
  bool pr_verify = false;
  std::string pr_conv = "formula";
  auto* cmd_pairs = app.add_subcommand("pairs", "Count prime pairs (p, p + gap) with p + gap <= x");
  cmd_pairs->add_option("x", pr_x, "Upper bound")->required();
  cmd_pairs->add_option("--gap", pr_gap, "Even gap 2n >= 2");
  cmd_pairs->add_flag("--verify", pr_verify, "Compare with the sieve oracle");
  cmd_pairs->add_option("--convention", pr_conv, "S(1) convention: paper | formula");
  cmd_pairs->callback([&] {
    action = [&] {
      const Convention conv = convention_or_throw(pr_conv);
      if (pr_gap == 0 || pr_gap % 2 != 0) throw UsageError("--gap must be even and >= 2");
      const CountReport r = count_pairs({pr_x, pr_gap / 2, conv}, g.count_options(pr_verify));
      out << (pr_verify ? "x,gap,t2n,oracle,match\n" : "x,gap,t2n\n");
      out << pr_x << ',' << pr_gap << ',';
      print_report_row(out, r);
      out << '\n';
      return r.matches() ? kOk : kMismatch;
    };
  });

  // pi
  std::uint64_t pi_x = 0;
  bool pi_verify = false;
  std::string pi_conv = "formula";
  auto* cmd_pi = app.add_subcommand("pi", "Count primes <= x");
  cmd_pi->add_option("x", pi_x, "Upper bound")->required();
  cmd_pi->add_flag("--verify", pi_verify, "Compare with the sieve oracle");
  cmd_pi->add_option("--convention", pi_conv, "S(1) convention: paper | formula");
  cmd_pi->callback([&] {
    action = [&] {
      const Convention conv = convention_or_throw(pi_conv);
      const CountReport r = count_primes(pi_x, conv, g.count_options(pi_verify));
      out << (pi_verify ? "x,pi,oracle,match\n" : "x,pi\n");
      out << pi_x << ',';
      print_report_row(out, r);
      out << '\n';
      return r.matches() ? kOk : kMismatch;
    };
  });

  // table
  std::uint64_t tb_lo = 0, tb_hi = 0;
  std::string tb_out;
  std::string tb_format = "csv";
  std::string tb_conv = "formula";
  auto* cmd_table = app.add_subcommand("table", "Write S over [lo, hi] as CSV or a binary cache");
  cmd_table->add_option("lo", tb_lo, "First n")->required();
  cmd_table->add_option("hi", tb_hi, "Last n")->required();
  cmd_table->add_option("--out", tb_out, "Destination file (CSV defaults to stdout)");
  cmd_table->add_option("--format", tb_format, "csv | cache")->check(CLI::IsMember({"csv", "cache"}));
  cmd_table->add_option("--convention", tb_conv, "S(1) convention: paper | formula");
  cmd_table->callback([&] {
    action = [&] {
      const Convention conv = convention_or_throw(tb_conv);
      if (tb_lo == 0 || tb_lo > tb_hi) throw UsageError("table needs 1 <= lo <= hi");

      if (tb_format == "cache") {
        std::filesystem::path path = tb_out;
        if (path.empty()) {
          const char* dir = std::getenv("SKT_CACHE_DIR");
          if (!dir || !*dir) throw UsageError("--format cache needs --out or SKT_CACHE_DIR");
          path = std::filesystem::path(dir) / ("s_" + std::to_string(tb_lo) + "_" + std::to_string(tb_hi) +
                                               "_" + std::string(to_string(conv.s_of_one)) + ".skt");
        }
        const STable table = s_range(tb_lo, tb_hi, conv, g.segment_size, g.threads);
        save_stable(path, table);
        out << "path,entries\n" << path.string() << ',' << table.size() << '\n';
        return kOk;
      }

      std::ofstream file;
      if (!tb_out.empty()) {
        file.open(tb_out, std::ios::trunc);
        if (!file) throw STableIoError("cannot open " + tb_out + " for writing");
      }
      std::ostream& dst = tb_out.empty() ? out : file;
      dst << "n,s,is_fixed_point\n";
      const SegmentSieve sieve(tb_hi, conv);
      std::vector<std::uint64_t> buf;
      for (std::uint64_t lo = tb_lo;;) {
        const std::uint64_t hi = std::min<std::uint64_t>(tb_hi, lo + (g.segment_size - 1));
        buf.resize(hi - lo + 1);
        sieve.fill(lo, hi, buf);
        for (std::uint64_t i = 0; i < buf.size(); ++i) {
          dst << lo + i << ',' << buf[i] << ',' << boolstr(buf[i] == lo + i) << '\n';
        }
        if (hi == tb_hi) break;
        lo = hi + 1;
      }
      dst.flush();
      if (!dst) throw STableIoError("write failed");
      return kOk;
    };
  });

  // verify
  VerifyOptions vo;
  auto* cmd_verify = app.add_subcommand("verify", "Sweep formula counts against the sieve oracle");
  cmd_verify->add_option("--max-x", vo.max_x, "Largest x to check");
  cmd_verify->add_option("--gaps", vo.gaps, "Comma-separated even gaps")->delimiter(',');
  cmd_verify->add_option("--step", vo.step, "Stride between sampled x")->check(CLI::PositiveNumber);
  cmd_verify->callback([&] {
    action = [&] {
      vo.threads = g.threads;
      vo.segment_size = g.segment_size;
      const VerifyReport report = run_verify(vo);
      print_verify_report(out, report);
      return report.total_mismatches() == 0 ? kOk : kMismatch;
    };
  });

  // bench
  std::uint64_t bn_max = 1'000'000;
  std::string bn_kernel = "range";
  auto* cmd_bench = app.add_subcommand("bench", "Time S generation and twin counting");
  cmd_bench->add_option("--max-x", bn_max, "Upper bound");
  cmd_bench->add_option("--kernel", bn_kernel, "naive | factor | range")
      ->check(CLI::IsMember({"naive", "factor", "range"}));
  cmd_bench->callback([&] {
    action = [&] {
      out << "kernel,max_x,s_seconds,count_seconds\n";
      if (bn_max == 0) return kOk;
      const Convention conv = Convention::formula();
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<std::uint64_t> values;
      if (bn_kernel == "range") {
        values = s_range(1, bn_max, conv, g.segment_size, g.threads).values;
      } else {
        values.reserve(bn_max);
        for (std::uint64_t n = 1; n <= bn_max; ++n) {
          values.push_back(bn_kernel == "naive" ? s_naive(n, conv) : s(n, conv));
        }
      }
      const double s_seconds = seconds_since(t0);
      const auto t1 = std::chrono::steady_clock::now();
      const CountReport r = count_twin(bn_max, conv, g.count_options(false));
      const double count_seconds = seconds_since(t1);
      (void)r;
      out << bn_kernel << ',' << bn_max << ',' << std::fixed << std::setprecision(6) << s_seconds << ','
          << count_seconds << '\n';
      out.unsetf(std::ios::fixed);
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const STableIoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace skt::cli
