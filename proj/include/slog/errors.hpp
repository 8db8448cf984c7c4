#pragma once

#include <stdexcept>
#include <string>

namespace slog {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Script text could not be parsed; carries a 1-based position.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

// An operation was invoked on data that violates its stated preconditions.
struct PrecondError : Error {
  using Error::Error;
};

// A quantity that must be finite for the requested computation is infinite.
struct InfiniteError : Error {
  using Error::Error;
};

// An intermediate polynomial exceeded the configured degree cap.
struct DegreeCapError : Error {
  using Error::Error;
};

// A cross-check inside the engine failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace slog
