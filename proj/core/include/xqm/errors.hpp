#pragma once

#include <stdexcept>
#include <string>

namespace xqm {

// Base class for all recoverable domain errors raised by the library.
// The CLI maps these to exit code 1; malformed input maps to InputError
// and exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroDivision : public Error {
 public:
  explicit ZeroDivision(const std::string& what) : Error(what) {}
};

class RankMismatch : public Error {
 public:
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class UnknownEigenvalue : public Error {
 public:
  explicit UnknownEigenvalue(const std::string& what) : Error(what) {}
};

class NotCommuting : public Error {
 public:
  explicit NotCommuting(const std::string& what) : Error(what) {}
};

class NotPhysicalInput : public Error {
 public:
  explicit NotPhysicalInput(const std::string& what) : Error(what) {}
};

class DegenerateState : public Error {
 public:
  explicit DegenerateState(const std::string& what) : Error(what) {}
};

class WeightSumInvalid : public Error {
 public:
  explicit WeightSumInvalid(const std::string& what) : Error(what) {}
};

class InvalidModel : public Error {
 public:
  explicit InvalidModel(const std::string& what) : Error(what) {}
};

// Malformed or missing input (files, JSON schemas, CLI arguments).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace xqm
