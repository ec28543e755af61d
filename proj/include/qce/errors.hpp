// Copyright (c) the qce authors. All rights reserved.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <stdexcept>
#include <string>

namespace qce {

/// Base class for all qce errors. Everything thrown by the library derives
/// from this, so CLI frontends can map failures to exit codes uniformly.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (YAML that does not parse, bad CSV, ...).
class SyntaxError : public Error {
 public:
  explicit SyntaxError(const std::string& msg) : Error(msg) {}
};

/// Structurally valid input that violates the schema. Carries the path of
/// the offending node, e.g. "integral_sets[0].n_electrons".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& reason)
      : Error(path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Requested problem size exceeds the configured qubit ceiling.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& msg) : Error(msg) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& msg) : Error(msg) {}
};

class UnknownModelError : public Error {
 public:
  explicit UnknownModelError(const std::string& msg) : Error(msg) {}
};

class ZeroNormError : public Error {
 public:
  explicit ZeroNormError(const std::string& msg) : Error(msg) {}
};

class ZeroOverlapError : public Error {
 public:
  explicit ZeroOverlapError(const std::string& msg) : Error(msg) {}
};

/// Control qubit lies inside the support of the operator it controls.
class OverlapError : public Error {
 public:
  explicit OverlapError(const std::string& msg) : Error(msg) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

class NoSolutionError : public Error {
 public:
  explicit NoSolutionError(const std::string& msg) : Error(msg) {}
};

class MultipleSolutionsError : public Error {
 public:
  explicit MultipleSolutionsError(const std::string& msg) : Error(msg) {}
};

class InsufficientPointsError : public Error {
 public:
  explicit InsufficientPointsError(const std::string& msg) : Error(msg) {}
};

class SingularDesignError : public Error {
 public:
  explicit SingularDesignError(const std::string& msg) : Error(msg) {}
};

class InsufficientSamplesError : public Error {
 public:
  explicit InsufficientSamplesError(const std::string& msg) : Error(msg) {}
};

}  // namespace qce
