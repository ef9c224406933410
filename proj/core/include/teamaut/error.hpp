#ifndef TEAMAUT_ERROR_HPP
#define TEAMAUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace teamaut {

/// Invalid model or invalid argument to an operation.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Synchronisation type spec does not cover a required action.
struct SpecIncompleteError : ModelError {
  std::string action;
  explicit SpecIncompleteError(const std::string& a)
      : ModelError("no synchronisation type for communicating action '" + a + "'"),
        action(a) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line(line),
        column(column) {}
};

}  // namespace teamaut

#endif
