#ifndef TOPOLAB_ERRORS_HPP
#define TOPOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "topolab/set_mask.hpp"

namespace topolab {

/// Base class of every domain error raised by the library. The CLI maps any
/// `Error` that escapes a subcommand to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroundSizeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A mask uses bits at or above the ground size.
class MaskOutOfRange : public Error {
 public:
  using Error::Error;
};

class MissingEmptyOrFull : public Error {
 public:
  using Error::Error;
};

enum class ClosureOp { Union, Intersection };

class NotClosed : public Error {
 public:
  NotClosed(SetMask u, SetMask v, ClosureOp op);

  SetMask first() const noexcept { return u_; }
  SetMask second() const noexcept { return v_; }
  ClosureOp op() const noexcept { return op_; }

 private:
  SetMask u_;
  SetMask v_;
  ClosureOp op_;
};

class BlocksNotAPartition : public Error {
 public:
  using Error::Error;
};

class InvalidPartitionType : public Error {
 public:
  using Error::Error;
};

class NotAPreorder : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidCoefficients : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class StrategyOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The two enumeration strategies disagreed. Indicates a bug, never user error.
class StrategyMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON shape, types, negative masks).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace topolab

#endif  // TOPOLAB_ERRORS_HPP
