#pragma once

#include <stdexcept>

namespace germlab {

// A configured cap (dimension, basis size, step budget, point count) was hit.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A mathematically forced identity failed; this always means a bug in the
// engine, never bad input.
class InternalCheckError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace germlab
