// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace blocksplit {

/// Thrown when an activation plan hands a solver an empty or out-of-range
/// block selection.
class plan_violation : public std::logic_error {
 public:
  explicit plan_violation(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a solver produces a non-finite intermediate quantity.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a reference run fails to meet its target tolerance.
class reference_failure : public std::runtime_error {
 public:
  explicit reference_failure(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}
}  // namespace detail

}  // namespace blocksplit
