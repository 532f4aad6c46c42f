#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specpos {

// 1-based position of a token in a .space document.
struct SourcePos {
  int line = 0;
  int column = 0;
};

namespace detail {
inline std::string with_pos(const std::string& message,
                            const std::optional<SourcePos>& pos) {
  if (!pos) return message;
  return "line " + std::to_string(pos->line) + ", column " +
         std::to_string(pos->column) + ": " + message;
}
}  // namespace detail

// Base class for every error raised by the library. what() includes the
// source position when one is known (errors surfaced while reading a
// .space document carry the position of the offending declaration).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message,
                 std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(detail::with_pos(message, pos)),
        message_(message),
        pos_(pos) {}

  const std::string& message() const noexcept { return message_; }
  const std::optional<SourcePos>& where() const noexcept { return pos_; }

 private:
  std::string message_;
  std::optional<SourcePos> pos_;
};

// Structural problems that have no more specific class below
// (empty poset, duplicate declarations).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The covers contain a directed cycle.
class CycleError : public Error {
 public:
  CycleError(const std::string& message, std::vector<std::string> cycle,
             std::optional<SourcePos> pos = std::nullopt)
      : Error(message, pos), cycle_(std::move(cycle)) {}

  // Points on one offending cycle, in walk order.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

// A declared cover is already implied by a longer directed path.
class NotReducedError : public Error {
 public:
  NotReducedError(const std::string& message,
                  std::pair<std::string, std::string> cover,
                  std::optional<SourcePos> pos = std::nullopt)
      : Error(message, pos), cover_(std::move(cover)) {}

  const std::pair<std::string, std::string>& cover() const noexcept {
    return cover_;
  }

 private:
  std::pair<std::string, std::string> cover_;
};

class UnknownPointError : public Error {
 public:
  UnknownPointError(const std::string& message, std::string point,
                    std::optional<SourcePos> pos = std::nullopt)
      : Error(message, pos), point_(std::move(point)) {}

  const std::string& point() const noexcept { return point_; }

 private:
  std::string point_;
};

// codim(x, y) and saturated_lengths(x, y) require x <= y.
class NotComparableError : public Error {
 public:
  using Error::Error;
};

// A candidate codimension function misses a point of the poset.
class MissingValueError : public Error {
 public:
  using Error::Error;
};

// Catalog lookup with a name that is not a fixture.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

// Enumeration request beyond the configured (or the hard) cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Bug sentinel: two provably equivalent checkers disagreed.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace specpos
