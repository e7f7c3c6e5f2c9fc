#pragma once

#include <stdexcept>
#include <string>

namespace trigsum {

/// Raised when arguments fall outside an operation's domain
/// (non-coprime pair, wrong congruence class, bad precision, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a summand would divide by an exact zero.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace trigsum
