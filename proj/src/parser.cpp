#include "nulldays/parser.hpp"

#include <array>
#include <cstdio>
#include <optional>

#include "nulldays/errors.hpp"

namespace nulldays {

namespace {

std::string describe(ParseError::Kind kind, Grammar grammar, std::string_view text,
                     std::size_t position, const std::string& reason) {
  std::string msg = kind == ParseError::Kind::Syntax ? "syntax error" : "invalid date";
  msg += " in \"";
  msg += text;
  msg += "\" (";
  msg += grammar_name(grammar);
  msg += "), position ";
  msg += std::to_string(position);
  msg += ": ";
  msg += reason;
  return msg;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Field {
  int value;
  std::size_t position;
};

// Matches the text field by field against a sequence of digit runs split by
// `sep`, each run with its own width bounds.
class Matcher {
 public:
  Matcher(std::string_view text, Grammar grammar) : text_(text), grammar_(grammar) {}

  Field digits(std::size_t min_width, std::size_t max_width, const char* what) {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_]) && pos_ - begin < max_width) ++pos_;
    const std::size_t width = pos_ - begin;
    if (width < min_width) {
      fail(std::string("expected ") + (min_width == max_width ? "exactly " : "at least ") +
           std::to_string(min_width) + " digit" + (min_width == 1 ? "" : "s") + " for " + what +
           found());
    }
    int value = 0;
    for (std::size_t i = begin; i < pos_; ++i) value = value * 10 + (text_[i] - '0');
    return {value, begin};
  }

  void literal(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'" + found());
    }
    ++pos_;
  }

  void end() {
    if (pos_ != text_.size()) fail("unexpected trailing input" + found());
  }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(ParseError::Kind::Syntax, grammar_, std::string(text_), pos_, reason);
  }

  std::string_view text_;
  Grammar grammar_;
  std::size_t pos_ = 0;
};

Date build(Grammar grammar, std::string_view text, Field year, Field month, Field day) {
  const auto semantic = [&](const Field& at, const std::string& reason) {
    return ParseError(ParseError::Kind::Semantic, grammar, std::string(text), at.position, reason);
  };
  if (year.value < kMinYear || year.value > kMaxYear) {
    throw semantic(year, "year " + std::to_string(year.value) + " outside 1..9999");
  }
  if (month.value < 1 || month.value > 12) {
    throw semantic(month, "month " + std::to_string(month.value) + " outside 1..12");
  }
  try {
    return Date::from_ymd(year.value, month.value, day.value);
  } catch (const ValidationError& e) {
    throw semantic(day, e.what());
  }
}

}  // namespace

std::string_view grammar_name(Grammar g) noexcept {
  return g == Grammar::Iso ? "ISO YYYY-MM-DD" : "slash M/D/YYYY";
}

ParseError::ParseError(Kind kind, Grammar grammar, std::string text, std::size_t position,
                       std::string reason)
    : std::invalid_argument(describe(kind, grammar, text, position, reason)),
      kind_(kind),
      grammar_(grammar),
      text_(std::move(text)),
      position_(position),
      reason_(std::move(reason)) {}

Date parse_date(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    Matcher m(text, Grammar::Slash);
    const Field month = m.digits(1, 2, "month");
    m.literal('/');
    const Field day = m.digits(1, 2, "day");
    m.literal('/');
    const Field year = m.digits(1, 4, "year");
    m.end();
    return build(Grammar::Slash, text, year, month, day);
  }
  Matcher m(text, Grammar::Iso);
  const Field year = m.digits(4, 4, "year");
  m.literal('-');
  const Field month = m.digits(2, 2, "month");
  m.literal('-');
  const Field day = m.digits(2, 2, "day");
  m.end();
  return build(Grammar::Iso, text, year, month, day);
}

std::string format_date(const Date& date) {
  std::array<char, 16> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02d-%02d", date.year(), date.month(), date.day());
  return buf.data();
}

}  // namespace nulldays
