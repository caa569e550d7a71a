#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qchaos {

// Bad argument or malformed in-memory value (out-of-range variable, length
// mismatch, value outside the map's domain).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested problem size exceeds a configured enumeration or memory limit.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint32_t requested, std::uint32_t limit);

  std::uint32_t requested() const noexcept { return requested_; }
  std::uint32_t limit() const noexcept { return limit_; }

 private:
  std::uint32_t requested_;
  std::uint32_t limit_;
};

}  // namespace qchaos
