#pragma once

#include <stdexcept>
#include <string>

namespace atn {

// Input violates a documented precondition or invariant.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Operation called on a value it is not defined for (e.g. a video codec
// passed to voice packetization).
struct UnsupportedOperation : std::runtime_error {
  explicit UnsupportedOperation(const std::string& what) : std::runtime_error(what) {}
};

// Unknown node id.
struct LookupError : std::runtime_error {
  explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

// Cluster partition cannot cover every LAP.
struct PartitionError : std::runtime_error {
  explicit PartitionError(const std::string& what) : std::runtime_error(what) {}
};

// File read/write failure.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atn
