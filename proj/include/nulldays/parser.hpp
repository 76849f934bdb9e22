#pragma once

// Strict date text grammars:
//
//   ISO    ^\d{4}-\d{2}-\d{2}$          2014-03-26
//   slash  ^\d{1,2}/\d{1,2}/\d{1,4}$    2/10/1984  (month first)
//
// A string containing '/' is matched against the slash grammar, anything
// else against ISO. Syntactically valid text is then checked against the
// calendar.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nulldays/date.hpp"

namespace nulldays {

enum class Grammar { Iso, Slash };

std::string_view grammar_name(Grammar g) noexcept;

class ParseError : public std::invalid_argument {
 public:
  enum class Kind {
    Syntax,    // text does not match the grammar
    Semantic,  // matches, but is not a calendar date
  };

  ParseError(Kind kind, Grammar grammar, std::string text, std::size_t position,
             std::string reason);

  Kind kind() const noexcept { return kind_; }
  Grammar grammar() const noexcept { return grammar_; }
  // Raw input, verbatim.
  const std::string& text() const noexcept { return text_; }
  // Byte offset where matching failed; for semantic errors, the start of the
  // offending field.
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  Kind kind_;
  Grammar grammar_;
  std::string text_;
  std::size_t position_;
  std::string reason_;
};

// Throws ParseError.
Date parse_date(std::string_view text);

// Zero-padded YYYY-MM-DD.
std::string format_date(const Date& date);

}  // namespace nulldays
