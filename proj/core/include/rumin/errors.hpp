#pragma once

#include <stdexcept>
#include <string>

namespace rumin {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Ambient dimensions or basis sizes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Degrees of forms do not match the operation's contract.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A form is not a member of the fiber the operation requires.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// A compactly supported form leaks outside the declared domain.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed literal, JSON document, or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity the implementation relies on failed; never expected to fire.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rumin
