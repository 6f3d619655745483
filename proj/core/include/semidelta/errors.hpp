#ifndef SEMIDELTA_ERRORS_HPP_
#define SEMIDELTA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semidelta {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A table entry lies outside 0..n-1.
struct ClosureViolation : Error {
  ClosureViolation(int row_, int col_, int value_)
      : Error("table entry at (" + std::to_string(row_) + ", " + std::to_string(col_) +
              ") = " + std::to_string(value_) + " is out of range"),
        row(row_),
        col(col_),
        value(value_) {}
  int row, col, value;
};

/// (a*b)*c != a*(b*c); carries the first failing triple in lexicographic order.
struct AssociativityViolation : Error {
  AssociativityViolation(int a_, int b_, int c_)
      : Error("associativity fails at (" + std::to_string(a_) + ", " + std::to_string(b_) +
              ", " + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
  int a, b, c;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

/// A partition passed where a congruence was required; (x, y, s) is a
/// violating triple: x ~ y but the s-translates are not related.
struct NotACongruence : Error {
  NotACongruence(int x_, int y_, int s_, bool left_)
      : Error("relation is not a congruence: (" + std::to_string(x_) + ", " +
              std::to_string(y_) + ") related but " + (left_ ? "left" : "right") +
              " translates by " + std::to_string(s_) + " are not"),
        x(x_),
        y(y_),
        s(s_),
        left(left_) {}
  int x, y, s;
  bool left;
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct PartitionMismatch : Error {
  using Error::Error;
};

struct NotT2RShaped : Error {
  using Error::Error;
};

/// Raised when a weakly exponential chain-congruence table matches no
/// classification template. This must never happen; seeing it means the
/// classification the library implements has been falsified on a finite
/// instance, so callers should treat it as a headline result, not a bug
/// to swallow.
struct ClassificationGap : Error {
  using Error::Error;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg, int line_ = -1) : Error(msg), line(line_) {}
  int line;
};

struct CheckpointVersionMismatch : Error {
  using Error::Error;
};

}  // namespace semidelta

#endif  // SEMIDELTA_ERRORS_HPP_
