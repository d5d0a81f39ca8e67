#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fibrecheck/errors.hpp"
#include "fibrecheck/power.hpp"

namespace fibrecheck {

// Syntax or semantic error in an input document, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message,
             std::vector<std::string> expected = {});

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Parses the line-oriented problem language:
//
//   field Q | field F <prime>
//   base y1 y2 ...
//   vars x1 x2 ...            (may be empty)
//   ideal: <poly>, <poly>, ...
//   module <rank>: (<poly>; <poly>), (...)
//   check open | flat | both
//   power <k>
//
// '#' starts a comment. A line ending in ',' continues on the next line.
// Checks default to both. Throws ParseError, UnsupportedInput (prime too
// large), or ResourceLimitError (expression expands past the term budget).
Problem parse_problem(std::string_view text);

// One polynomial over ring, in the same expression syntax. Variable names
// are the ring's, including copy names such as x[2].
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// Canonical text for a problem; parse_problem(render_problem(p)) == p.
std::string render_problem(const Problem& problem);

}  // namespace fibrecheck
