#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rankarg/framework.hpp"
#include "rankarg/ranking.hpp"

namespace rankarg {

/// Malformed input; line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// APX: statements `arg(NAME).` and `att(A,B).`, any number per line, `%`
/// starts a comment. Repeated arg declarations are idempotent; attack
/// endpoints must be declared somewhere in the document.
ArgumentationFramework parse_apx(std::string_view text);
std::string serialize_apx(const ArgumentationFramework& af);

/// TGF: one node id per line, a `#` line, then one `FROM TO` edge per line.
/// Blank lines are ignored.
ArgumentationFramework parse_tgf(std::string_view text);
std::string serialize_tgf(const ArgumentationFramework& af);

/// Measure over the compact generic space of `af`: one `STATES RANK` line per
/// world, STATES holding one digit per argument in declared order (0: X
/// false, 1: X and Y, 2: X and not Y) and RANK a nonnegative integer, a
/// fraction p/q, or `inf`. Unlisted worlds get rank `inf`; `#` starts a
/// comment. The result must be normalized.
RankingMeasure parse_measure(std::string_view text, const ArgumentationFramework& af);

}  // namespace rankarg
