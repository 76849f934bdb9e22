#pragma once

// Differential verification of the null-days algorithm against the oracles,
// plus checks of its structural properties.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nulldays/core.hpp"
#include "nulldays/date.hpp"

namespace nulldays::verify {

// Inclusive calendar range.
class DateRange {
 public:
  // Throws ValidationError when end precedes start.
  DateRange(Date start, Date end);

  const Date& start() const noexcept { return start_; }
  const Date& end() const noexcept { return end_; }
  std::int64_t day_count() const noexcept;

  friend bool operator==(const DateRange&, const DateRange&) = default;

 private:
  Date start_;
  Date end_;
};

struct Mismatch {
  Date date;
  std::string oracle;  // "daycount", "zeller" or "sakamoto"
  Weekday expected;    // oracle
  Weekday actual;      // null-days
  WeekdayTrace trace;
};

struct NulldayViolation {
  int year;
  std::string detail;

  friend bool operator==(const NulldayViolation&, const NulldayViolation&) = default;
};

struct VerificationReport {
  DateRange range;
  std::int64_t days_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<NulldayViolation> nullday_violations;
  // days_checked / 7 when the range is a whole number of weeks.
  std::optional<std::int64_t> cycle_week_count;
  double elapsed_ms = 0.0;

  bool ok() const noexcept { return mismatches.empty() && nullday_violations.empty(); }
};

struct VerifyOptions {
  // Worker threads; 0 is treated as 1.
  unsigned jobs = 1;
  // Also run check_nullday_invariant for every year overlapping the range.
  bool nullday_invariant = false;
};

// Compares weekday_of with all three oracles for every day in `range`.
// Mismatches are sorted by (date, oracle) so the result does not depend on
// `options.jobs`.
VerificationReport verify_range(const DateRange& range, const VerifyOptions& options = {});

// Common years: all twelve null-days share a weekday W. Leap years: months
// 3..12 share W and months 1..2 land on W - 1. Throws RangeError outside
// 1..9999.
std::vector<NulldayViolation> check_nullday_invariant(int year);

struct CycleViolation {
  Date date;
  Weekday weekday;
  Weekday weekday_plus_400;
};

// Samples `sample_count` dates with year <= 9599 from a generator seeded by
// `seed` and checks weekday_of(Y, m, d) == weekday_of(Y + 400, m, d).
// Throws DomainError when sample_count < 1.
std::vector<CycleViolation> check_cycle_property(std::int64_t sample_count, std::uint64_t seed);

// Deterministic stream of valid dates within [first, last], uniform over
// epoch days. Same seed, same sequence on every platform.
class DateSampler {
 public:
  DateSampler(std::uint64_t seed, Date first, Date last);
  Date next();

 private:
  std::mt19937_64 engine_;
  std::int64_t lo_;
  std::uint64_t span_;
};

std::string to_text(const VerificationReport& report);
// JSON document: {range: {start, end}, days_checked, mismatches,
// nullday_violations, weeks, elapsed_ms}.
std::string to_json(const VerificationReport& report, int indent = 2);

}  // namespace nulldays::verify
