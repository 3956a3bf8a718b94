#pragma once

#include <stdexcept>
#include <string>

namespace surfbasis {

/// Malformed or invalid input (instance files, embedding descriptions,
/// out-of-range arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request that the algorithms do not support, such as a
/// cycle basis of a non-orientable embedding.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated algorithm invariant. Seeing one of these means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surfbasis
