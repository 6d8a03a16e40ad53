#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings.
struct SpecMismatch : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  using Error::Error;
};

/// A Frobenius/Verschiebung/substitution index outside its domain (n < 1).
struct InvalidIndex : Error {
  using Error::Error;
};

/// Malformed textual input. `token` is the offending piece of input.
struct ParseError : Error {
  ParseError(const std::string& what, std::string token)
      : Error(what), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace wittkit
