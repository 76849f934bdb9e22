#pragma once

// Reference weekday implementations that share nothing with the null-days
// path. Used for differential testing.

#include <compare>
#include <cstdint>

#include "nulldays/date.hpp"

namespace nulldays::oracles {

// Rata Die day number: 0001-01-01 is day 1.
struct EpochDay {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(const EpochDay&, const EpochDay&) = default;
};

inline constexpr EpochDay kFirstEpochDay{1};        // 0001-01-01
inline constexpr EpochDay kLastEpochDay{3652059};   // 9999-12-31

EpochDay days_from_epoch(const Date& date);

// Throws RangeError outside [kFirstEpochDay, kLastEpochDay].
Date date_from_epoch(EpochDay day);

Weekday weekday_by_daycount(const Date& date);
Weekday weekday_zeller(const Date& date);
Weekday weekday_sakamoto(const Date& date);

}  // namespace nulldays::oracles
