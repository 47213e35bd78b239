#pragma once

#include <stdexcept>
#include <string>

namespace ssm {

// Internal invariant breaches are hard failures, never silent continuation.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what_) : std::logic_error(what_) {}
};

}  // namespace ssm

#define SSM_CHECK(cond, msg)                                  \
  do {                                                        \
    if (!(cond)) throw ::ssm::InvariantError(std::string(msg)); \
  } while (0)
