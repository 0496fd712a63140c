#pragma once

#include <stdexcept>
#include <string>

namespace osalg {

/// Base class for all errors raised by the library.
class osalg_error : public std::runtime_error {
public:
  explicit osalg_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad files, out-of-range elements, schema violations.
class input_error : public osalg_error {
public:
  explicit input_error(const std::string& what) : osalg_error(what) {}
};

/// A documented precondition of an operation was violated by the caller
/// (contracting a loop, expanding over a non-diagonal candidate, ...).
class precondition_error : public osalg_error {
public:
  explicit precondition_error(const std::string& what) : osalg_error(what) {}
};

}  // namespace osalg
