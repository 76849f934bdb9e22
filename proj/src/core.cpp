#include "nulldays/core.hpp"

#include <array>
#include <string>

#include "nulldays/errors.hpp"

namespace nulldays {

namespace {

constexpr std::array<int, 12> kCommonMonthLengths = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};

}  // namespace

YearSplit split_year(int year) {
  if (year < kMinYear || year > kMaxYear) {
    throw RangeError("year " + std::to_string(year) + " outside supported range 1..9999");
  }
  const int y = year % 100;
  return {year / 100, y, y / 10, y % 10};
}

int null_day_of_month(int month) {
  if (month < 1 || month > 12) {
    throw DomainError("month " + std::to_string(month) + " outside 1..12");
  }
  return kNullDayTable[month - 1];
}

int month_offset_w0(int month, int day) {
  const int anchor = null_day_of_month(month);
  // Leap-agnostic bound: February may have 29 days in some year.
  const int longest = month == 2 ? 29 : kCommonMonthLengths[month - 1];
  if (day < 1 || day > longest) {
    throw DomainError("day " + std::to_string(day) + " cannot occur in month " +
                      std::to_string(month));
  }
  return day - anchor;
}

int century_term_w1(int century) {
  if (century < 0) {
    throw DomainError("century " + std::to_string(century) + " is negative");
  }
  return -2 * (century % 4);
}

int year_term_w2_direct(int year_of_century) {
  if (year_of_century < 0 || year_of_century > 99) {
    throw DomainError("year of century " + std::to_string(year_of_century) + " outside 0..99");
  }
  return 5 * year_of_century / 4;
}

int year_term_w2_digits(int tens, int ones) {
  if (tens < 0 || tens > 9 || ones < 0 || ones > 9) {
    throw DomainError("digits (" + std::to_string(tens) + ", " + std::to_string(ones) +
                      ") outside 0..9");
  }
  // floor(ones/4 - tens/2) == floor((ones - 2*tens) / 4); the numerator may
  // be negative, so round toward -inf explicitly.
  const int num = ones - 2 * tens;
  const int floored = num >= 0 ? num / 4 : -((-num + 3) / 4);
  return ones - tens + floored;
}

WeekdayTrace weekday_of(const Date& date) {
  const YearSplit split = split_year(date.year());
  const int w0 = month_offset_w0(date.month(), date.day());
  const int w1 = century_term_w1(split.century);
  const int w2 = year_term_w2_direct(split.year_of_century);
  const int correction = date.month() <= 2 && is_leap_year(date.year()) ? -1 : 0;
  const int total = w0 + w1 + w2 + correction;
  return WeekdayTrace{
      .input = date,
      .split = split,
      .null_day = {date.month(), null_day_of_month(date.month())},
      .w0_raw = w0,
      .w1_raw = w1,
      .w2_raw = w2,
      .w2_digits_raw = year_term_w2_digits(split.tens, split.ones),
      .leap_correction = correction,
      .total_raw = total,
      .weekday = static_cast<Weekday>(mod7(total)),
  };
}

}  // namespace nulldays
