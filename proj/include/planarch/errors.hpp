#pragma once

#include <stdexcept>
#include <string>

namespace planarch {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-loop or otherwise malformed vertex pair.
struct InvalidEdge : Error {
  using Error::Error;
};

// Same edge listed twice when building a graph.
struct DuplicateEdge : Error {
  using Error::Error;
};

// Vertex id outside [0, n).
struct IndexOutOfRange : Error {
  using Error::Error;
};

// Input outside the supported domain (e.g. graph too large for the
// encoder, parameter below the smallest meaningful value).
struct Unsupported : Error {
  using Error::Error;
};

// Malformed graph6 text; `offset` is the byte position of the defect.
struct FormatError : Error {
  std::size_t offset;
  FormatError(const std::string& what, std::size_t at)
      : Error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// A crossing configuration references an edge the graph does not have.
struct EdgeNotInGraph : Error {
  using Error::Error;
};

// A crossing configuration violates a structural invariant.
struct InvalidConfiguration : Error {
  using Error::Error;
};

// A maximality check was asked about a graph outside the class.
struct MembershipViolated : Error {
  using Error::Error;
};

// Wall-clock budget ran out inside an exponential search.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace planarch
