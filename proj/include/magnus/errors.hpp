#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed word text or element key; carries a human-readable position.
struct ParseError : Error {
  using Error::Error;
};

// Generator index outside 1..rank.
struct RankError : Error {
  using Error::Error;
};

// Values from incompatible groups mixed in one operation.
struct StructureError : Error {
  using Error::Error;
};

// An exact kernel was asked for more than its configured cap allows.
// Callers may fall back to a BFS oracle or refuse; never silently approximate.
struct CapacityError : Error {
  using Error::Error;
};

// Exact word metric requested on a group that only offers a bounded BFS oracle.
struct MetricError : Error {
  using Error::Error;
};

}  // namespace magnus
