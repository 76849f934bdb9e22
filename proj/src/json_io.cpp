#include "nulldays/json_io.hpp"

#include <string>

#include "nulldays/parser.hpp"

namespace nulldays {

Json trace_to_json(const WeekdayTrace& trace) {
  return Json{
      {"date", format_date(trace.input)},
      {"year", trace.input.year()},
      {"month", trace.input.month()},
      {"day", trace.input.day()},
      {"century", trace.split.century},
      {"year_of_century", trace.split.year_of_century},
      {"tens", trace.split.tens},
      {"ones", trace.split.ones},
      {"null_day", {{"month", trace.null_day.month}, {"day", trace.null_day.day}}},
      {"w0", trace.w0_raw},
      {"w0_mod7", mod7(trace.w0_raw)},
      {"w1", trace.w1_raw},
      {"w1_mod7", mod7(trace.w1_raw)},
      {"w2", trace.w2_raw},
      {"w2_mod7", mod7(trace.w2_raw)},
      {"w2_digits", trace.w2_digits_raw},
      {"w2_digits_mod7", mod7(trace.w2_digits_raw)},
      {"leap_correction", trace.leap_correction},
      {"total", trace.total_raw},
      {"total_mod7", mod7(trace.total_raw)},
      {"weekday", weekday_name(trace.weekday)},
      {"weekday_index", to_index(trace.weekday)},
  };
}

Json null_day_table_json() {
  Json table = Json::object();
  for (int month = 1; month <= 12; ++month) {
    table[std::to_string(month)] = kNullDayTable[month - 1];
  }
  return table;
}

}  // namespace nulldays
