#pragma once

#include <stdexcept>
#include <string>

namespace subseq {

/// Malformed or unsupported input: bad letters, bad files, wrong argument kinds.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a construction bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace subseq
