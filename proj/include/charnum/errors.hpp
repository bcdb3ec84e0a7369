#pragma once

#include <stdexcept>
#include <string>

namespace charnum {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings (mismatched point-variable count),
// or a point index is out of range for the ring.
struct ring_mismatch : error {
    using error::error;
};

// A validity guard failed (degree too small for a formula, malformed
// query parameters).  Overridable where documented via EngineOptions::force.
struct guard_error : error {
    using error::error;
};

// The query is outside the range covered by the implemented formulas
// (e.g. too many nodes).  Never overridable.
struct unsupported_error : error {
    using error::error;
};

// An internal invariant broke, e.g. a division that must be exact was not.
struct internal_error : error {
    using error::error;
};

} // namespace charnum
