#pragma once

#include <stdexcept>
#include <string>

namespace dotplus {

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input fails a structural requirement (non-group table, bad parameters, ...).
struct invalid_input : error {
  explicit invalid_input(const std::string& msg) : error(msg) {}
};

/// Operands belong to different groups.
struct group_mismatch : error {
  explicit group_mismatch(const std::string& msg) : error(msg) {}
};

/// A configured size/enumeration cap was exceeded.
struct cap_exceeded : error {
  explicit cap_exceeded(const std::string& msg) : error(msg) {}
};

}  // namespace dotplus
