#ifndef KCPART_ERRORS_HPP
#define KCPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kcpart {

// A count table was asked to grow past the hard ceiling configured for its
// store.  Deliberate: unbounded growth of exact tables is a resource bug,
// not a recoverable condition.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive audit was requested beyond the configured enumeration bounds.
class ScaleError : public std::runtime_error {
 public:
  explicit ScaleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cache file is well-formed but inconsistent with what it claims to hold.
class CacheError : public std::runtime_error {
 public:
  explicit CacheError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kcpart

#endif
