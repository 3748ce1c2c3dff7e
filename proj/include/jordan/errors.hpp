#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

// A negative power of t survived q -> 1. Signals a wrong contraction.
class PoleError : public std::runtime_error {
public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A series was not expanded far enough to read off the requested coefficient.
class TruncationError : public std::runtime_error {
public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Normal ordering exceeded its step budget.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jordan
