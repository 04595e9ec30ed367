#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

// Recoverable conditions a caller can act on (bad parameters, oversized
// requests). Everything derives from Error so the batch runner can turn a
// throwing check into a failed report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PDividesDenominator : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class IndexOutOfTable : public Error {
 public:
  using Error::Error;
};

class IndexRangeTooLarge : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class TermBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PrimeTooSmall : public Error {
 public:
  using Error::Error;
};

class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

class MissingParam : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Programming errors: combining residues of different moduli, or a sum that
// should have been p-integral but was not.
class ModulusMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PIntegralityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace supercong
