#ifndef MWB_ERROR_HPP
#define MWB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the formula and monoid-spec parsers; column is 1-based.
struct ParseError : Error {
  ParseError(std::string const& message, size_t column)
      : Error(message + " (column " + std::to_string(column) + ")"),
        column(column) {}
  size_t column;
};

// Raised when a bounded evaluation would enumerate more candidates than the
// configured guard allows; callers should tighten bounds or supply witnesses.
struct EvalLimitError : Error {
  using Error::Error;
};

// Raised on malformed numeric codes (decode of a value no encoder produces).
struct CodingError : Error {
  using Error::Error;
};

}  // namespace mwb

#endif
