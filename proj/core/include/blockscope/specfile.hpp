#pragma once

#include <string>

#include "blockscope/errors.hpp"
#include "blockscope/hopf.hpp"

namespace blockscope {

/// Malformed algebra spec; the message starts with "<origin>:<line>:".
class SpecError : public PreconditionError {
 public:
  SpecError(const std::string& origin, int line, const std::string& what)
      : PreconditionError(origin + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses an algebra spec (grammar in docs/algebra-spec.md) and validates
/// the Hopf axioms; an axiom failure is reported as a SpecError naming the
/// axiom and the first failing basis tuple.
HopfAlgebra parse_spec(const std::string& text, const std::string& origin = "<spec>");
HopfAlgebra load_spec(const std::string& path);

/// Coefficient in polynomial notation over the prime field ("a^2+2*a+1").
Elem parse_element(const Field& f, const std::string& s);

}  // namespace blockscope
