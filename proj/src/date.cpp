#include "nulldays/date.hpp"

#include <array>
#include <string>

#include "nulldays/errors.hpp"

namespace nulldays {

namespace {

constexpr std::array<std::string_view, 7> kWeekdayNames = {
    "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday"};

constexpr std::array<std::string_view, 12> kMonthNames = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

constexpr std::array<int, 12> kCommonMonthLengths = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};

void require_year(int year) {
  if (year < kMinYear || year > kMaxYear) {
    throw RangeError("year " + std::to_string(year) + " outside supported range 1..9999");
  }
}

}  // namespace

bool is_leap_year(int year) {
  require_year(year);
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  const bool leap = is_leap_year(year);
  if (month < 1 || month > 12) {
    throw ValidationError("month " + std::to_string(month) + " outside 1..12");
  }
  return month == 2 && leap ? 29 : kCommonMonthLengths[month - 1];
}

Date Date::from_ymd(int year, int month, int day) {
  if (year < kMinYear || year > kMaxYear) {
    throw ValidationError("year " + std::to_string(year) + " outside 1..9999");
  }
  if (month < 1 || month > 12) {
    throw ValidationError("month " + std::to_string(month) + " outside 1..12");
  }
  const int last = days_in_month(year, month);
  if (day < 1 || day > last) {
    std::string msg = "day " + std::to_string(day) + " invalid for " +
                      std::string(kMonthNames[month - 1]) + " " + std::to_string(year) +
                      " (1.." + std::to_string(last);
    if (month == 2 && day == 29) msg += ", not a leap year";
    msg += ")";
    throw ValidationError(msg);
  }
  return Date(year, month, day);
}

bool is_before_gregorian_adoption(const Date& date) {
  constexpr auto kMonth = 10;
  constexpr auto kDay = 15;
  if (date.year() != kGregorianAdoptionYear) return date.year() < kGregorianAdoptionYear;
  if (date.month() != kMonth) return date.month() < kMonth;
  return date.day() < kDay;
}

Weekday weekday_from_index(int index) {
  if (index < 0 || index > 6) {
    throw DomainError("weekday index " + std::to_string(index) + " outside 0..6");
  }
  return static_cast<Weekday>(index);
}

std::string_view weekday_name(Weekday w) noexcept { return kWeekdayNames[to_index(w)]; }

std::optional<Weekday> weekday_from_name(std::string_view name) noexcept {
  for (int i = 0; i < 7; ++i) {
    if (kWeekdayNames[i] == name) return static_cast<Weekday>(i);
  }
  return std::nullopt;
}

}  // namespace nulldays
