#pragma once

#include <stdexcept>
#include <string>

namespace aig {

/// A requested size exceeds a configured cap (enumeration, canonical form,
/// model construction).
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bounded cycle search hit its length cap while a longer cycle through the
/// requested vertices still exists.
class CycleCapExceeded : public std::runtime_error {
 public:
  explicit CycleCapExceeded(std::size_t cap)
      : std::runtime_error("no cycle of length <= " + std::to_string(cap) +
                           " through the vertices, but a longer one exists"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// An argument that is not a vertex of the graph or space it is tested against.
class NotAVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed topology text or JSON.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace aig
