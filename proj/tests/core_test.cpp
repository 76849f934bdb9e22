#include <cmath>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "doctest.h"
#include "nulldays/core.hpp"
#include "nulldays/errors.hpp"

using namespace nulldays;

TEST_CASE("is_leap_year") {
  CHECK(is_leap_year(1984));
  CHECK_FALSE(is_leap_year(1900));
  CHECK(is_leap_year(2000));
  CHECK_FALSE(is_leap_year(2014));
  CHECK(is_leap_year(4));
  CHECK_THROWS_AS(is_leap_year(0), RangeError);
  CHECK_THROWS_AS(is_leap_year(10000), RangeError);
}

TEST_CASE("Date validation") {
  CHECK_NOTHROW(Date::from_ymd(2000, 2, 29));
  CHECK_NOTHROW(Date::from_ymd(1, 1, 1));
  CHECK_NOTHROW(Date::from_ymd(9999, 12, 31));
  CHECK_THROWS_AS(Date::from_ymd(1900, 2, 29), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(2023, 2, 29), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(2023, 4, 31), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(2023, 13, 1), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(2023, 0, 1), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(2023, 1, 0), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(0, 1, 1), ValidationError);
  CHECK_THROWS_AS(Date::from_ymd(10000, 1, 1), ValidationError);

  try {
    Date::from_ymd(2023, 2, 29);
    FAIL("expected throw");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("not a leap year") != std::string::npos);
  }
}

TEST_CASE("Date ordering is calendar order") {
  CHECK(Date::from_ymd(1999, 12, 31) < Date::from_ymd(2000, 1, 1));
  CHECK(Date::from_ymd(2000, 1, 31) < Date::from_ymd(2000, 2, 1));
  CHECK(Date::from_ymd(2000, 2, 1) < Date::from_ymd(2000, 2, 2));
  CHECK(Date::from_ymd(2000, 2, 2) == Date::from_ymd(2000, 2, 2));
}

TEST_CASE("Gregorian adoption cutoff") {
  CHECK(is_before_gregorian_adoption(Date::from_ymd(1582, 10, 14)));
  CHECK_FALSE(is_before_gregorian_adoption(Date::from_ymd(1582, 10, 15)));
  CHECK(is_before_gregorian_adoption(Date::from_ymd(1, 1, 1)));
  CHECK_FALSE(is_before_gregorian_adoption(Date::from_ymd(1583, 1, 1)));
}

TEST_CASE("Weekday names are a fixed bijection") {
  const char* names[] = {"Sunday", "Monday", "Tuesday", "Wednesday",
                         "Thursday", "Friday", "Saturday"};
  std::set<std::string_view> seen;
  for (int i = 0; i < 7; ++i) {
    const Weekday w = weekday_from_index(i);
    CHECK(to_index(w) == i);
    CHECK(weekday_name(w) == names[i]);
    CHECK(weekday_from_name(names[i]) == w);
    seen.insert(weekday_name(w));
  }
  CHECK(seen.size() == 7);
  CHECK_FALSE(weekday_from_name("Funday").has_value());
  CHECK_THROWS_AS(weekday_from_index(7), DomainError);
  CHECK_THROWS_AS(weekday_from_index(-1), DomainError);
}

TEST_CASE("mod7 is the non-negative residue") {
  CHECK(mod7(0) == 0);
  CHECK(mod7(-1) == 6);
  CHECK(mod7(-7) == 0);
  CHECK(mod7(-2) == 5);
  CHECK(mod7(96) == 5);
  CHECK(mod7(38) == 3);
}

TEST_CASE("split_year") {
  CHECK(split_year(2014) == YearSplit{20, 14, 1, 4});
  CHECK(split_year(1984) == YearSplit{19, 84, 8, 4});
  CHECK(split_year(100) == YearSplit{1, 0, 0, 0});
  CHECK(split_year(9999) == YearSplit{99, 99, 9, 9});
  CHECK(split_year(7) == YearSplit{0, 7, 0, 7});
  CHECK_THROWS_AS(split_year(0), RangeError);

  for (int year = 1; year <= 9999; ++year) {
    const YearSplit s = split_year(year);
    REQUIRE(year == 100 * s.century + s.year_of_century);
    REQUIRE(s.year_of_century == 10 * s.tens + s.ones);
    REQUIRE((s.ones >= 0 && s.ones <= 9 && s.tens >= 0 && s.tens <= 9));
  }
}

TEST_CASE("null-day table") {
  const int expected[] = {1, 12, 5, 2, 7, 4, 9, 6, 3, 8, 12, 10};
  for (int m = 1; m <= 12; ++m) {
    CHECK(null_day_of_month(m) == expected[m - 1]);
    CHECK(null_day_of_month(m) <= 12);
  }
  CHECK(null_day_of_month(3) == 5);
  CHECK(null_day_of_month(11) == 12);
  CHECK(null_day_of_month(1) == 1);
  CHECK_THROWS_AS(null_day_of_month(0), DomainError);
  CHECK_THROWS_AS(null_day_of_month(13), DomainError);
}

TEST_CASE("month_offset_w0") {
  CHECK(month_offset_w0(3, 26) == 21);
  CHECK(month_offset_w0(2, 10) == -2);
  CHECK(month_offset_w0(1, 1) == 0);
  CHECK(month_offset_w0(2, 29) == 17);
  CHECK(month_offset_w0(11, 1) == -11);
  CHECK_THROWS_AS(month_offset_w0(2, 30), DomainError);
  CHECK_THROWS_AS(month_offset_w0(4, 31), DomainError);
  CHECK_THROWS_AS(month_offset_w0(13, 1), DomainError);
  CHECK_THROWS_AS(month_offset_w0(1, 0), DomainError);
}

TEST_CASE("century_term_w1") {
  CHECK(century_term_w1(20) == 0);
  CHECK(century_term_w1(19) == -6);
  CHECK(century_term_w1(4) == 0);
  CHECK(century_term_w1(21) == -2);
  CHECK(century_term_w1(22) == -4);
  CHECK_THROWS_AS(century_term_w1(-1), DomainError);
  for (int c = 0; c < 1000; ++c) {
    REQUIRE(century_term_w1(c) == century_term_w1(c + 4));
  }
}

TEST_CASE("year_term_w2_direct") {
  CHECK(year_term_w2_direct(14) == 17);
  CHECK(year_term_w2_direct(84) == 105);
  CHECK(year_term_w2_direct(0) == 0);
  CHECK(year_term_w2_direct(99) == 123);
  CHECK_THROWS_AS(year_term_w2_direct(100), DomainError);
  CHECK_THROWS_AS(year_term_w2_direct(-1), DomainError);
}

TEST_CASE("year_term_w2_digits") {
  CHECK(year_term_w2_digits(1, 4) == 3);
  CHECK(year_term_w2_digits(8, 4) == -7);
  CHECK(year_term_w2_digits(0, 0) == 0);
  // floor(0/4 - 1/2) = -1, not the truncated 0.
  CHECK(year_term_w2_digits(1, 0) == -2);
  CHECK_THROWS_AS(year_term_w2_digits(10, 0), DomainError);
  CHECK_THROWS_AS(year_term_w2_digits(0, -1), DomainError);
}

TEST_CASE("direct and digit year terms agree mod 7 for all 100 years") {
  for (int y = 0; y <= 99; ++y) {
    CAPTURE(y);
    // Exact rational floor, computed without the library's integer trick.
    const int tens = y / 10;
    const int ones = y % 10;
    const int floored = static_cast<int>(std::floor(ones / 4.0 - tens / 2.0));
    CHECK(year_term_w2_digits(tens, ones) == ones - tens + floored);
    CHECK(mod7(year_term_w2_direct(y)) == mod7(year_term_w2_digits(tens, ones)));
  }
}

TEST_CASE("weekday_of reproduces the worked examples") {
  SUBCASE("2014-03-26") {
    const auto t = weekday_of(Date::from_ymd(2014, 3, 26));
    CHECK(t.w0_raw == 21);
    CHECK(t.w1_raw == 0);
    CHECK(t.w2_raw == 17);
    CHECK(t.w2_digits_raw == 3);
    CHECK(t.leap_correction == 0);
    CHECK(t.total_raw == 38);
    CHECK(t.weekday == Weekday::Wednesday);
    CHECK(t.null_day.month == 3);
    CHECK(t.null_day.day == 5);
  }
  SUBCASE("1984-02-10") {
    const auto t = weekday_of(Date::from_ymd(1984, 2, 10));
    CHECK(t.w0_raw == -2);
    CHECK(t.w1_raw == -6);
    CHECK(t.w2_raw == 105);
    CHECK(t.w2_digits_raw == -7);
    CHECK(t.leap_correction == -1);
    CHECK(t.total_raw == 96);
    CHECK(t.weekday == Weekday::Friday);
  }
  SUBCASE("2000-01-01") {
    const auto t = weekday_of(Date::from_ymd(2000, 1, 1));
    CHECK(t.leap_correction == -1);
    CHECK(t.total_raw == -1);
    CHECK(t.weekday == Weekday::Saturday);
  }
}

TEST_CASE("leap correction applies only to Jan/Feb of leap years") {
  CHECK(weekday_of(Date::from_ymd(2000, 2, 29)).leap_correction == -1);
  CHECK(weekday_of(Date::from_ymd(2000, 3, 1)).leap_correction == 0);
  CHECK(weekday_of(Date::from_ymd(1900, 1, 1)).leap_correction == 0);
  CHECK(weekday_of(Date::from_ymd(2014, 1, 1)).leap_correction == 0);
}

TEST_CASE("trace invariants and agreement with brute force on random dates") {
  std::mt19937_64 rng(2014);
  for (int i = 0; i < 20000; ++i) {
    const int y = static_cast<int>(rng() % 9999) + 1;
    const int m = static_cast<int>(rng() % 12) + 1;
    const int d = static_cast<int>(rng() % brute_force::month_length(y, m)) + 1;
    CAPTURE(y);
    CAPTURE(m);
    CAPTURE(d);
    const auto t = weekday_of(Date::from_ymd(y, m, d));
    REQUIRE(t.total_raw == t.w0_raw + t.w1_raw + t.w2_raw + t.leap_correction);
    REQUIRE(to_index(t.weekday) == ((t.total_raw % 7) + 7) % 7);
    REQUIRE(to_index(t.weekday) >= 0);
    REQUIRE(to_index(t.weekday) <= 6);
    REQUIRE(to_index(t.weekday) == brute_force::weekday(y, m, d));
  }
}
