#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quillen {

// Group too large to enumerate under the configured cap; callers fall back to
// local (element-arithmetic only) verification.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string &what, std::uint64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A consistency check between two independent computations disagreed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace quillen
