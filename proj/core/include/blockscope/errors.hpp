#pragma once

#include <stdexcept>
#include <string>

namespace blockscope {

/// Input violates a documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation is well-defined but not implemented for this input class.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A splitting step needs roots outside the current field. Carries the
/// extension degree that would make the step succeed.
class FieldTooSmall : public std::runtime_error {
 public:
  FieldTooSmall(int degree, const std::string& what)
      : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Broken internal invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace blockscope
