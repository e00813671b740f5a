#ifndef SEMICONG_ERRORS_HPP
#define SEMICONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semicong {

// Domain-level failures: bounds exceeded, improper quotients, carrier
// mismatches, malformed tables. CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Script/expression syntax failures, with 1-based location. Exit code 2.
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace semicong

#endif
