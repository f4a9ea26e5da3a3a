#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicl {

/// Malformed graph6 / edge-list input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Class hypotheses a constructive procedure depends on.
enum class Precondition {
  kMinOrder,
  kConnected,
  kInducedC4Free,
  kFalseTwinFree,
  kMinDegreeTwo,
  kGoodAssignment,
};

const char* to_string(Precondition p) noexcept;

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(Precondition which)
      : std::runtime_error(std::string("precondition violated: ") + to_string(which)),
        which_(which) {}

  Precondition which() const noexcept { return which_; }

 private:
  Precondition which_;
};

/// A construction that must succeed under its preconditions did not.
/// Seeing this means a bug, not bad input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bicl
