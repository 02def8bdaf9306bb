#pragma once

// Text notation for patterns, used by fixture files, the command line and
// reports.
//
//   pattern  ::= word ( "|" clause )*
//   word     ::= digit+ | "[" int ("," int)* "]" | "[" "]"
//   clause   ::= "sh" boxset
//              | "mark" boxset ">=" int
//              | "dec" boxset "avoids" "(" pattern ")"
//   boxset   ::= "{" box ("," box)* "}"
//   box      ::= "(" int "," int ")"
//
// Barred patterns put a "'" after each barred letter: "35'241", "[3,5',2,4,1]".
// Whitespace between tokens is ignored.

#include "meshkit/pattern.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace meshkit {

/// Byte offsets [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const SourceSpan&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(message + " at bytes " + std::to_string(span.start) + ".." + std::to_string(span.end)),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

using ParsedPattern = std::variant<Pattern, BarredPattern>;

/// Parses either form. Text containing "'" is a barred pattern.
ParsedPattern parse(std::string_view text);

/// Parses a pattern; a barred pattern with exactly one bar is accepted and
/// translated to its mesh form. Throws ParseError otherwise.
Pattern parse_pattern(std::string_view text);

BarredPattern parse_barred(std::string_view text);

/// Canonical text: boxes sorted, clauses ordered sh, mark, dec.
std::string print(const Pattern& pat);
std::string print(const BarredPattern& pat);
std::string print(const ParsedPattern& pat);

/// (2k+1)-line picture of the grid: "●" for points, "▒" for shaded boxes,
/// the count digit for marked boxes and a letter per decorated region, with a
/// legend line per decoration. Throws std::invalid_argument for k > 20.
std::string render_ascii(const Pattern& pat);

}  // namespace meshkit
