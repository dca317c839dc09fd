#pragma once

#include <stdexcept>
#include <string>

namespace vennk {

enum class ErrorCode {
  parse = 2,
  degenerate = 3,
  domain = 4,
  not_venn = 5,
  retries_exhausted = 6,
  internal = 7,
  epsilon_too_large = 8,
  cancelled = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(ErrorCode::parse, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

}  // namespace vennk
