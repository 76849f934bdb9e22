#include "nulldays/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <thread>
#include <tuple>

#include "nulldays/errors.hpp"
#include "nulldays/json_io.hpp"
#include "nulldays/oracles.hpp"
#include "nulldays/parser.hpp"

namespace nulldays::verify {

namespace {

using oracles::EpochDay;

struct Oracle {
  const char* name;
  Weekday (*fn)(const Date&);
};

constexpr std::array<Oracle, 3> kOracles = {{
    {"daycount", &oracles::weekday_by_daycount},
    {"zeller", &oracles::weekday_zeller},
    {"sakamoto", &oracles::weekday_sakamoto},
}};

std::vector<Mismatch> check_block(std::int64_t first, std::int64_t last) {
  std::vector<Mismatch> found;
  for (std::int64_t n = first; n <= last; ++n) {
    const Date date = oracles::date_from_epoch(EpochDay{n});
    const WeekdayTrace trace = weekday_of(date);
    for (const Oracle& oracle : kOracles) {
      const Weekday expected = oracle.fn(date);
      if (expected != trace.weekday) {
        found.push_back(Mismatch{date, oracle.name, expected, trace.weekday, trace});
      }
    }
  }
  return found;
}

std::string describe(const Date& date, Weekday w) {
  return format_date(date) + " " + std::string(weekday_name(w));
}

}  // namespace

DateRange::DateRange(Date start, Date end) : start_(start), end_(end) {
  if (end_ < start_) {
    throw ValidationError("range end " + format_date(end_) + " precedes start " +
                          format_date(start_));
  }
}

std::int64_t DateRange::day_count() const noexcept {
  return oracles::days_from_epoch(end_).value - oracles::days_from_epoch(start_).value + 1;
}

VerificationReport verify_range(const DateRange& range, const VerifyOptions& options) {
  const auto began = std::chrono::steady_clock::now();

  const std::int64_t first = oracles::days_from_epoch(range.start()).value;
  const std::int64_t last = oracles::days_from_epoch(range.end()).value;
  const std::int64_t total = last - first + 1;
  const auto jobs = static_cast<std::int64_t>(
      std::clamp<std::int64_t>(options.jobs == 0 ? 1 : options.jobs, 1, total));

  VerificationReport report{range, 0, {}, {}, std::nullopt, 0.0};
  if (jobs == 1) {
    report.mismatches = check_block(first, last);
  } else {
    std::vector<std::vector<Mismatch>> partial(static_cast<std::size_t>(jobs));
    std::vector<std::jthread> workers;
    workers.reserve(partial.size());
    const std::int64_t chunk = (total + jobs - 1) / jobs;
    for (std::int64_t j = 0; j < jobs; ++j) {
      const std::int64_t lo = first + j * chunk;
      const std::int64_t hi = std::min(last, lo + chunk - 1);
      if (lo > hi) break;
      workers.emplace_back([&partial, j, lo, hi] { partial[j] = check_block(lo, hi); });
    }
    workers.clear();
    for (auto& part : partial) {
      report.mismatches.insert(report.mismatches.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
    }
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) {
              return std::tie(a.date, a.oracle) < std::tie(b.date, b.oracle);
            });

  report.days_checked = total;
  if (total % 7 == 0) report.cycle_week_count = total / 7;

  if (options.nullday_invariant) {
    for (int year = range.start().year(); year <= range.end().year(); ++year) {
      auto found = check_nullday_invariant(year);
      report.nullday_violations.insert(report.nullday_violations.end(), found.begin(),
                                       found.end());
    }
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - began).count();
  return report;
}

std::vector<NulldayViolation> check_nullday_invariant(int year) {
  const bool leap = is_leap_year(year);
  std::vector<NulldayViolation> violations;

  const Date march_anchor = Date::from_ymd(year, 3, null_day_of_month(3));
  const Weekday shared = weekday_of(march_anchor).weekday;
  const Weekday early = leap ? static_cast<Weekday>(mod7(to_index(shared) - 1)) : shared;

  for (int month = 1; month <= 12; ++month) {
    const Date anchor = Date::from_ymd(year, month, null_day_of_month(month));
    const Weekday got = weekday_of(anchor).weekday;
    const Weekday want = month <= 2 ? early : shared;
    if (got != want) {
      std::string detail = describe(anchor, got) + ", expected " +
                           std::string(weekday_name(want)) + " (" +
                           (leap ? "leap" : "common") + " year, 3/5 falls on " +
                           std::string(weekday_name(shared)) + ")";
      violations.push_back({year, std::move(detail)});
    }
  }
  return violations;
}

DateSampler::DateSampler(std::uint64_t seed, Date first, Date last)
    : engine_(seed),
      lo_(oracles::days_from_epoch(first).value),
      span_(static_cast<std::uint64_t>(DateRange(first, last).day_count())) {}

Date DateSampler::next() {
  // Rejection sampling keeps the draw uniform and independent of the
  // standard library's distribution implementation.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span_;
  std::uint64_t raw = engine_();
  while (raw >= limit) raw = engine_();
  return oracles::date_from_epoch(EpochDay{lo_ + static_cast<std::int64_t>(raw % span_)});
}

std::vector<CycleViolation> check_cycle_property(std::int64_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) {
    throw DomainError("sample_count must be >= 1, got " + std::to_string(sample_count));
  }
  DateSampler sampler(seed, Date::from_ymd(kMinYear, 1, 1), Date::from_ymd(kMaxYear - 400, 12, 31));
  std::vector<CycleViolation> violations;
  for (std::int64_t i = 0; i < sample_count; ++i) {
    const Date date = sampler.next();
    const Date later = Date::from_ymd(date.year() + 400, date.month(), date.day());
    const Weekday a = weekday_of(date).weekday;
    const Weekday b = weekday_of(later).weekday;
    if (a != b) violations.push_back({date, a, b});
  }
  return violations;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "range:          " << format_date(report.range.start()) << " .. "
      << format_date(report.range.end()) << '\n';
  out << "days checked:   " << report.days_checked << '\n';
  out << "exact weeks:    ";
  if (report.cycle_week_count) {
    out << *report.cycle_week_count << '\n';
  } else {
    out << "n/a (" << report.days_checked % 7 << " days left over)\n";
  }
  out << "mismatches:     " << report.mismatches.size() << '\n';
  for (const Mismatch& m : report.mismatches) {
    out << "  " << format_date(m.date) << ": " << m.oracle << " says "
        << weekday_name(m.expected) << ", null-days says " << weekday_name(m.actual)
        << " (total " << m.trace.total_raw << ")\n";
  }
  out << "null-day violations: " << report.nullday_violations.size() << '\n';
  for (const NulldayViolation& v : report.nullday_violations) {
    out << "  " << v.year << ": " << v.detail << '\n';
  }
  out << "elapsed:        " << report.elapsed_ms << " ms\n";
  out << "result:         " << (report.ok() ? "OK" : "FAILED") << '\n';
  return out.str();
}

std::string to_json(const VerificationReport& report, int indent) {
  Json mismatches = Json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back(Json{
        {"date", format_date(m.date)},
        {"oracle", m.oracle},
        {"expected", weekday_name(m.expected)},
        {"actual", weekday_name(m.actual)},
        {"trace", trace_to_json(m.trace)},
    });
  }
  Json violations = Json::array();
  for (const NulldayViolation& v : report.nullday_violations) {
    violations.push_back(Json{{"year", v.year}, {"detail", v.detail}});
  }
  Json doc{
      {"range", {{"start", format_date(report.range.start())},
                 {"end", format_date(report.range.end())}}},
      {"days_checked", report.days_checked},
      {"mismatches", std::move(mismatches)},
      {"nullday_violations", std::move(violations)},
      {"weeks", nullptr},
      {"elapsed_ms", report.elapsed_ms},
  };
  if (report.cycle_week_count) doc["weeks"] = *report.cycle_week_count;
  return doc.dump(indent);
}

}  // namespace nulldays::verify
