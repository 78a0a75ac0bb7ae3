#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stablepat {

/// Caller passed arguments outside an operation's parameter range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments were in range but violate a mathematical precondition
/// (e.g. shifting down a set that contains 1, projecting the empty set).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive scan would exceed its configured budget. The message carries
/// the exact size of the refused search space.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::string count)
      : std::runtime_error(what), count_(std::move(count)) {}

  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

/// Malformed input document. `where` is a JSON pointer or byte offset.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::string where)
      : UsageError(what + " (at " + where + ")"), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace stablepat
