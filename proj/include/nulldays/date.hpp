#pragma once

#include <compare>
#include <optional>
#include <string_view>

namespace nulldays {

inline constexpr int kMinYear = 1;
inline constexpr int kMaxYear = 9999;

// Gregorian rule, applied proleptically. Throws RangeError outside 1..9999.
bool is_leap_year(int year);

// Throws RangeError for a bad year and ValidationError for a bad month.
int days_in_month(int year, int month);

// A validated proleptic Gregorian calendar date in years 1..9999.
class Date {
 public:
  // Throws ValidationError naming the violated rule.
  static Date from_ymd(int year, int month, int day);

  constexpr int year() const noexcept { return year_; }
  constexpr int month() const noexcept { return month_; }
  constexpr int day() const noexcept { return day_; }

  // Calendar order.
  friend constexpr auto operator<=>(const Date&, const Date&) = default;

 private:
  constexpr Date(int y, int m, int d) noexcept : year_(y), month_(m), day_(d) {}

  int year_;
  int month_;
  int day_;
};

// Day 1 of the Gregorian calendar's civil adoption.
inline constexpr int kGregorianAdoptionYear = 1582;
bool is_before_gregorian_adoption(const Date& date);

enum class Weekday : int {
  Sunday = 0,
  Monday = 1,
  Tuesday = 2,
  Wednesday = 3,
  Thursday = 4,
  Friday = 5,
  Saturday = 6,
};

constexpr int to_index(Weekday w) noexcept { return static_cast<int>(w); }

// Throws DomainError unless 0 <= index <= 6.
Weekday weekday_from_index(int index);

std::string_view weekday_name(Weekday w) noexcept;
std::optional<Weekday> weekday_from_name(std::string_view name) noexcept;

// Mathematical residue in [0, 6] for any sign of `value`.
constexpr int mod7(long long value) noexcept {
  return static_cast<int>(((value % 7) + 7) % 7);
}

}  // namespace nulldays
