#pragma once

#include <stdexcept>
#include <string>

namespace nilgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotDominant : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

enum class MembershipFailure { NotSL, NotSO, NotSigmaFixed, WrongSize };

class MembershipError : public Error {
 public:
  MembershipError(MembershipFailure f, const std::string& what) : Error(what), failure_(f) {}
  MembershipFailure failure() const { return failure_; }

 private:
  MembershipFailure failure_;
};

}  // namespace nilgr
