#pragma once

#include <stdexcept>
#include <string>

namespace repkit {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A domain object failed its defining laws (group axioms, homomorphism
/// property, field preconditions, ...). The message names the first failed
/// law and a witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document: syntax errors, unknown element labels,
/// field-descriptor mismatches.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace repkit
