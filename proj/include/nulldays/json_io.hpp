#pragma once

#include "json.hpp"
#include "nulldays/core.hpp"
#include "nulldays/date.hpp"

namespace nulldays {

// Field order is part of the output contract, so everything is emitted as
// ordered_json.
using Json = nlohmann::ordered_json;

Json trace_to_json(const WeekdayTrace& trace);

// {"1": 1, "2": 12, ..., "12": 10}
Json null_day_table_json();

}  // namespace nulldays
