#include "nulldays/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "nulldays/core.hpp"
#include "nulldays/errors.hpp"
#include "nulldays/json_io.hpp"
#include "nulldays/oracles.hpp"
#include "nulldays/parser.hpp"
#include "nulldays/verify.hpp"

namespace nulldays::cli {

namespace {

constexpr std::string_view kBold = "\033[1m";
constexpr std::string_view kGreen = "\033[32m";
constexpr std::string_view kRed = "\033[31m";
constexpr std::string_view kReset = "\033[0m";

std::string styled(const Streams& io, std::string_view code, std::string_view text) {
  if (!io.color) return std::string(text);
  return std::string(code) + std::string(text) + std::string(kReset);
}

// Parses user text and reports failures on the diagnostic stream.
std::optional<Date> read_date(const std::string& text, const Streams& io) {
  try {
    Date date = parse_date(text);
    if (is_before_gregorian_adoption(date)) {
      io.err << "warning: " << format_date(date)
             << " precedes the Gregorian calendar's civil adoption on 1582-10-15; "
                "the proleptic Gregorian calendar is used\n";
    }
    return date;
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

std::string signed_str(int v) { return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v); }

void explain_text(const WeekdayTrace& t, const Streams& io) {
  const auto& s = t.split;
  std::ostream& out = io.out;
  out << "date:            " << format_date(t.input) << "  (m=" << t.input.month()
      << ", d=" << t.input.day() << ", c=" << s.century << ", y=" << s.year_of_century
      << ", y1=" << s.tens << ", y0=" << s.ones << ")\n";
  out << "null-day:        " << t.null_day.month << '/' << t.null_day.day << '\n';
  out << "w0 = " << t.input.day() << " - " << t.null_day.day << " = " << t.w0_raw << " ≡ "
      << mod7(t.w0_raw) << " (mod 7)\n";
  out << "w1 = -2 * (" << s.century << " mod 4) = " << t.w1_raw << '\n';
  out << "w2 = floor(5*" << s.year_of_century << "/4) = " << t.w2_raw << " ≡ " << mod7(t.w2_raw)
      << " (mod 7)\n";
  out << "w2 (digits) = " << s.ones << " - " << s.tens << " + floor(" << s.ones << "/4 - "
      << s.tens << "/2) = " << t.w2_digits_raw << " ≡ " << mod7(t.w2_digits_raw) << " (mod 7)\n";
  out << "leap correction = " << t.leap_correction;
  if (t.leap_correction != 0) {
    out << "  (" << t.input.year() << " is a leap year and m=" << t.input.month() << ")";
  }
  out << '\n';
  out << "w = " << t.w0_raw << " + " << signed_str(t.w1_raw) << " + " << t.w2_raw;
  if (t.leap_correction != 0) out << " + " << signed_str(t.leap_correction);
  out << " = " << t.total_raw << " ≡ " << mod7(t.total_raw) << " (mod 7)\n";
  out << "weekday:         " << styled(io, kBold, weekday_name(t.weekday)) << '\n';
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* c = std::getenv("NULLDAYS_COLOR")) env.color = c;
  env.stdout_is_tty = ::isatty(STDOUT_FILENO) != 0;
  return env;
}

int cmd_weekday(const std::string& date_text, OutputMode mode, const Streams& io) {
  const auto date = read_date(date_text, io);
  if (!date) return kUsageError;
  const Weekday w = weekday_of(*date).weekday;
  if (mode == OutputMode::Json) {
    io.out << Json{{"date", format_date(*date)},
                   {"weekday", weekday_name(w)},
                   {"weekday_index", to_index(w)}}
                  .dump(2)
           << '\n';
  } else {
    io.out << styled(io, kBold, weekday_name(w)) << '\n';
  }
  return kSuccess;
}

int cmd_explain(const std::string& date_text, OutputMode mode, const Streams& io) {
  const auto date = read_date(date_text, io);
  if (!date) return kUsageError;
  const WeekdayTrace trace = weekday_of(*date);
  if (mode == OutputMode::Json) {
    io.out << trace_to_json(trace).dump(2) << '\n';
  } else {
    explain_text(trace, io);
  }
  return kSuccess;
}

int cmd_verify(const std::string& from_text, const std::string& to_text, OutputMode mode,
               unsigned jobs, const Streams& io) {
  const auto from = read_date(from_text, io);
  if (!from) return kUsageError;
  const auto to = read_date(to_text, io);
  if (!to) return kUsageError;
  if (jobs < 1) {
    io.err << "error: --jobs must be at least 1\n";
    return kUsageError;
  }

  std::optional<verify::DateRange> range;
  try {
    range.emplace(*from, *to);
  } catch (const ValidationError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const verify::VerificationReport report =
      verify::verify_range(*range, {.jobs = jobs, .nullday_invariant = true});
  if (mode == OutputMode::Json) {
    io.out << verify::to_json(report) << '\n';
  } else {
    std::string text = verify::to_text(report);
    if (io.color) {
      const std::string_view verdict = report.ok() ? "OK" : "FAILED";
      const auto at = text.rfind(verdict);
      text.replace(at, verdict.size(), styled(io, report.ok() ? kGreen : kRed, verdict));
    }
    io.out << text;
  }
  return report.ok() ? kSuccess : kVerificationFailed;
}

int cmd_bench(std::int64_t iterations, OutputMode mode, const Streams& io) {
  if (iterations < 1) {
    io.err << "error: iterations must be at least 1\n";
    return kUsageError;
  }

  // One full 400-year cycle starting 2000-01-01, cycled through in order.
  const std::int64_t first = oracles::days_from_epoch(Date::from_ymd(2000, 1, 1)).value;
  const std::int64_t cycle = std::min<std::int64_t>(iterations, 146097);
  std::vector<Date> workload;
  workload.reserve(static_cast<std::size_t>(cycle));
  for (std::int64_t i = 0; i < cycle; ++i) {
    workload.push_back(oracles::date_from_epoch(oracles::EpochDay{first + i}));
  }

  struct Entry {
    std::string_view name;
    std::function<Weekday(const Date&)> fn;
  };
  const std::array<Entry, 4> entries = {{
      {"null-days", [](const Date& d) { return weekday_of(d).weekday; }},
      {"zeller", &oracles::weekday_zeller},
      {"sakamoto", &oracles::weekday_sakamoto},
      {"daycount", &oracles::weekday_by_daycount},
  }};

  struct Result {
    std::string_view name;
    double elapsed_ms;
    double per_second;
  };
  std::vector<Result> results;
  volatile int sink = 0;
  for (const Entry& e : entries) {
    int acc = 0;
    const auto began = std::chrono::steady_clock::now();
    for (std::int64_t i = 0; i < iterations; ++i) {
      acc += to_index(e.fn(workload[static_cast<std::size_t>(i % cycle)]));
    }
    const auto took = std::chrono::steady_clock::now() - began;
    sink = sink + acc;
    // Clamp to one clock tick so a sub-resolution run still yields a finite rate.
    const auto ns = std::max<std::int64_t>(
        1, std::chrono::duration_cast<std::chrono::nanoseconds>(took).count());
    results.push_back({e.name, static_cast<double>(ns) / 1e6,
                       static_cast<double>(iterations) * 1e9 / static_cast<double>(ns)});
  }

  if (mode == OutputMode::Json) {
    Json rows = Json::array();
    for (const Result& r : results) {
      rows.push_back(Json{{"algorithm", r.name},
                          {"iterations", iterations},
                          {"elapsed_ms", r.elapsed_ms},
                          {"per_second", r.per_second}});
    }
    io.out << rows.dump(2) << '\n';
  } else {
    io.out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(14)
           << "iterations" << std::setw(14) << "elapsed ms" << std::setw(18) << "dates/second"
           << '\n';
    for (const Result& r : results) {
      io.out << std::left << std::setw(12) << r.name << std::right << std::setw(14) << iterations
             << std::setw(14) << std::fixed << std::setprecision(4) << r.elapsed_ms
             << std::setw(18) << std::setprecision(0) << r.per_second << '\n';
    }
    io.out.unsetf(std::ios::floatfield);
    io.out << std::setprecision(6);
  }
  return kSuccess;
}

int cmd_table(OutputMode mode, const Streams& io) {
  if (mode == OutputMode::Json) {
    io.out << null_day_table_json().dump(2) << '\n';
    return kSuccess;
  }
  struct Group {
    std::vector<int> months;
    std::string_view note;
  };
  const std::array<Group, 4> groups = {{
      {{1}, "first day of the year"},
      {{3, 5, 7, 9}, "odd numbers 3, 5, 7, 9 rotated"},
      {{2, 12, 10, 8, 6, 4}, "even numbers 12, 10, 8, 6, 4, 2 rotated"},
      {{11}, "exception: 11 reads as 1 + 1 = 2, like February's 12"},
  }};
  io.out << "null-days (month/day); in a common year all fall on one weekday\n";
  for (const Group& g : groups) {
    std::string cells;
    for (int m : g.months) {
      if (!cells.empty()) cells += "  ";
      cells += std::to_string(m) + "/" + std::to_string(null_day_of_month(m));
    }
    io.out << "  " << std::left << std::setw(36) << cells << g.note << '\n';
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  bool color = env.stdout_is_tty;
  if (env.color) {
    if (*env.color == "always") {
      color = true;
    } else if (*env.color == "never") {
      color = false;
    } else if (*env.color != "auto") {
      err << "warning: NULLDAYS_COLOR=" << *env.color
          << " not one of auto, always, never; using auto\n";
    }
  }

  CLI::App app{"Day of the week by the null-days method, with oracle cross-checks"};
  app.name(args.empty() ? "nulldays" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON on stdout instead of text");

  std::string date_text;
  auto* weekday = app.add_subcommand("weekday", "Print the weekday of a date");
  weekday->add_option("date", date_text, "YYYY-MM-DD or M/D/YYYY (month first)")->required();

  std::string explain_date;
  auto* explain = app.add_subcommand("explain", "Show every step of the null-days computation");
  explain->add_option("date", explain_date, "YYYY-MM-DD or M/D/YYYY (month first)")->required();

  std::string from = "2000-01-01";
  std::string to = "2399-12-31";
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Compare against three oracles over a date range");
  verify->add_option("--from", from, "First date (inclusive)")->capture_default_str();
  verify->add_option("--to", to, "Last date (inclusive)")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::int64_t iterations = 100000;
  auto* bench = app.add_subcommand("bench", "Throughput of the null-days method and the oracles");
  bench->add_option("-n,--iterations", iterations, "Dates per algorithm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Print the null-day table");

  app.footer(
      "Slash dates are always month first: 3/5/2020 is March 5, and 26/03/2014 is rejected.\n"
      "Exit status: 0 success, 1 verification failure, 2 usage or parse error.\n"
      "NULLDAYS_COLOR=auto|always|never controls text styling.");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsageError;
  }

  const OutputMode mode = json ? OutputMode::Json : OutputMode::Text;
  const Streams io{out, err, color && mode == OutputMode::Text};
  if (weekday->parsed()) return cmd_weekday(date_text, mode, io);
  if (explain->parsed()) return cmd_explain(explain_date, mode, io);
  if (verify->parsed()) return cmd_verify(from, to, mode, jobs, io);
  if (bench->parsed()) return cmd_bench(iterations, mode, io);
  if (table->parsed()) return cmd_table(mode, io);
  return kUsageError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err, Environment::from_process());
}

}  // namespace nulldays::cli
