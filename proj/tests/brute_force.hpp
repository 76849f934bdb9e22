#pragma once

// Test-only reference: counts days one year and one month at a time, with
// its own leap rule and month lengths. Shares no code with the library.

#include <cstdint>

namespace brute_force {

inline bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int month_length(int y, int m) {
  constexpr int kLengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && leap(y) ? 29 : kLengths[m - 1];
}

// 0001-01-01 -> 1.
inline std::int64_t rata_die(int y, int m, int d) {
  std::int64_t n = 0;
  for (int yy = 1; yy < y; ++yy) n += leap(yy) ? 366 : 365;
  for (int mm = 1; mm < m; ++mm) n += month_length(y, mm);
  return n + d;
}

// 0 = Sunday. 0001-01-01 was a Monday.
inline int weekday(int y, int m, int d) { return static_cast<int>(rata_die(y, m, d) % 7); }

}  // namespace brute_force
