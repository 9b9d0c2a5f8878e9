#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syllogos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SYLLOGOS_ERROR(Name)              \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

SYLLOGOS_ERROR(InvariantViolation);
SYLLOGOS_ERROR(StructureError);
SYLLOGOS_ERROR(UndefinedProportion);
SYLLOGOS_ERROR(Unsupported);
SYLLOGOS_ERROR(Inconsistent);
SYLLOGOS_ERROR(EmptyDenominator);
SYLLOGOS_ERROR(CardinalityRequired);
SYLLOGOS_ERROR(NoSharedMiddle);
SYLLOGOS_ERROR(TermMismatch);

#undef SYLLOGOS_ERROR

/// Raised by the statement grammar. `position` is a byte offset into the
/// parsed text (always <= its length).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : Error("at byte " + std::to_string(position) + ": expected " + expected +
              (found.empty() ? std::string(", found end of input") : ", found '" + found + "'")),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace syllogos
