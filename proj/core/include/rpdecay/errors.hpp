#pragma once

#include <stdexcept>
#include <string>

namespace rpdecay {

// Typed failures thrown by the numerical kernels. Each maps to one of the
// error conditions named in the operation contracts; the CLI translates
// ConfigError -> exit 2 and NumericalError (incl. derived) -> exit 3.

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySlice : std::runtime_error {
  explicit EmptySlice(const std::string& what) : std::runtime_error(what) {}
};

struct RootFindError : std::runtime_error {
  explicit RootFindError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSlice : std::runtime_error {
  explicit DegenerateSlice(const std::string& what) : std::runtime_error(what) {}
};

struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct NonpositiveValue : std::runtime_error {
  explicit NonpositiveValue(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientRadius : std::runtime_error {
  explicit InsufficientRadius(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rpdecay
