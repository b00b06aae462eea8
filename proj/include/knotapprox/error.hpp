#pragma once

#include <stdexcept>
#include <string>

namespace knotapprox {

enum class ErrorKind {
  LabelMismatch,
  SingularMatrix,
  Parse,
  Unsupported,
  Resource,
  Domain,
  LemmaViolation,
  UnderDetermined,
  Consistency,
  MissingFamily,
  InvalidIndex,
  DecompositionFailure,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C API and CLI
// can map it onto a status / exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures also record the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace knotapprox
