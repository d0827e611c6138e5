#pragma once

#include <stdexcept>
#include <string>

namespace prodwidth {

/// Thrown when an exhaustive search is asked to run beyond its size advisory
/// and the caller did not raise the budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (codec, flag files). Carries a human-readable
/// location in the message.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace prodwidth
