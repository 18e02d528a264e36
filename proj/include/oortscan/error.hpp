#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oortscan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (order, degree or subgroup count) would be exceeded.
class CapExceeded : public Error {
public:
  CapExceeded(std::string const &what, std::size_t observed, std::size_t cap)
    : Error(what + " (" + std::to_string(observed) + " > cap " +
            std::to_string(cap) + ")"),
      observed_(observed), cap_(cap) {}

  std::size_t observed() const noexcept { return observed_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t observed_;
  std::size_t cap_;
};

#define OORTSCAN_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  };

OORTSCAN_DEFINE_ERROR(BadPermutation)
OORTSCAN_DEFINE_ERROR(NotAMember)
OORTSCAN_DEFINE_ERROR(NotASubgroup)
OORTSCAN_DEFINE_ERROR(NotNormal)
OORTSCAN_DEFINE_ERROR(NotElementaryAbelian)
OORTSCAN_DEFINE_ERROR(NotCyclicByP)
OORTSCAN_DEFINE_ERROR(BadParameters)
OORTSCAN_DEFINE_ERROR(BadDegree)
OORTSCAN_DEFINE_ERROR(InconsistentCover)
OORTSCAN_DEFINE_ERROR(BadOrder)
OORTSCAN_DEFINE_ERROR(UnknownScenario)

#undef OORTSCAN_DEFINE_ERROR

/// Malformed textual input; line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(std::string const &msg, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + msg),
      line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace oortscan
