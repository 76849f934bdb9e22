#pragma once

// Null-days weekday algorithm.
//
// Each month has an anchor ("null-day"). In a common year all twelve
// anchors fall on the same weekday. The weekday of m/d in year 100c + y is
//
//   w = (d - anchor(m)) + (-2 * (c mod 4)) + floor(5y / 4) [- 1]   (mod 7)
//
// with 0 = Sunday, where the trailing -1 applies to January and February of
// a leap year.

#include <array>

#include "nulldays/date.hpp"

namespace nulldays {

struct YearSplit {
  int century = 0;          // floor(year / 100)
  int year_of_century = 0;  // year mod 100
  int tens = 0;             // tens digit of year_of_century
  int ones = 0;             // ones digit of year_of_century

  friend constexpr bool operator==(const YearSplit&, const YearSplit&) = default;
};

// Throws RangeError outside 1..9999.
YearSplit split_year(int year);

struct NullDay {
  int month;
  int day;
};

// Anchor day per month, indexed by month - 1.
inline constexpr std::array<int, 12> kNullDayTable = {1, 12, 5, 2, 7, 4, 9, 6, 3, 8, 12, 10};

// Throws DomainError unless 1 <= month <= 12.
int null_day_of_month(int month);

// day - anchor(month), unreduced. Accepts any month/day pair that can occur
// in some year (so 2/29 is allowed). Throws DomainError otherwise.
int month_offset_w0(int month, int day);

// -2 * (century mod 4). Throws DomainError for a negative century.
int century_term_w1(int century);

// floor(5y / 4) for 0 <= y <= 99. Throws DomainError otherwise.
int year_term_w2_direct(int year_of_century);

// Digit form y0 - y1 + floor(y0/4 - y1/2); congruent to the direct form
// mod 7 but not equal to it. Throws DomainError for a non-decimal digit.
int year_term_w2_digits(int tens, int ones);

// Every intermediate of one weekday_of evaluation.
struct WeekdayTrace {
  Date input;
  YearSplit split;
  NullDay null_day;
  int w0_raw = 0;
  int w1_raw = 0;
  int w2_raw = 0;
  int w2_digits_raw = 0;
  int leap_correction = 0;
  int total_raw = 0;
  Weekday weekday = Weekday::Sunday;
};

WeekdayTrace weekday_of(const Date& date);

}  // namespace nulldays
