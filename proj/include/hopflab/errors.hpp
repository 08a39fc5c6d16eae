// Error type shared by all modules; the kind drives CLI exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace hopflab {

enum class ErrorKind {
  Input,                       // malformed flags, files, or values
  Syntax,                      // DSL syntax error (message carries line:col)
  Semantic,                    // DSL semantic error
  SpaceMismatch,               // scalars over different parameter lists
  NotConstant,                 // a rational was required
  PresentationInconsistency,   // normal words do not match declared dimension
  IncompleteRewriting,         // associativity certification failed
  NonUnitLeading,              // completion met a non-rational leading coefficient
  Realization,                 // group/character constraints violated
  NotCleft,                    // section equations unsolvable
  NotInvertible,               // convolution inverse does not exist
  Unsupported,
  Internal,
};

class HopflabError : public std::runtime_error {
 public:
  HopflabError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hopflab
