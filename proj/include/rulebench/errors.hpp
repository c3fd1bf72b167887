#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rulebench {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An atom was evaluated against an assignment that does not cover it.
class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom: " + atom) {}
};

// Truth-table operations are capped at 16 distinct atoms.
class AtomBudgetError : public Error {
 public:
  explicit AtomBudgetError(std::size_t n)
      : Error("atom budget exceeded: " + std::to_string(n) + " > 16") {}
};

// A rewrite law was requested on a formula that has no eligible site.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// stack_laws ran out of applicable laws mid-stack.
class StackingFailedError : public Error {
 public:
  using Error::Error;
};

// forward_chain received a rule or fact outside the implication-form grammar.
class UnsupportedRuleFormError : public Error {
 public:
  using Error::Error;
};

// The renderer has no template for the given formula shape.
class RenderError : public Error {
 public:
  using Error::Error;
};

// Recursive-descent parse failure; position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at offset " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Group vocabulary is malformed (duplicate, reserved or empty attribute).
class VocabularyError : public Error {
 public:
  using Error::Error;
};

// Prediction set does not line up with the dataset being scored.
class ScoringError : public Error {
 public:
  using Error::Error;
};

}  // namespace rulebench
