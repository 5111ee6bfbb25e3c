#pragma once

#include <stdexcept>
#include <string>

namespace skr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : Error {
  PoleError(const std::string& what, int order) : Error(what), order(order) {}
  int order;
};

// Raised when a brute-force closure or enumeration exceeds its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace skr
