#pragma once

#include <stdexcept>
#include <string>

namespace numdec {

/// Unusable input data: malformed dictionary files, bad encodings, empty
/// datasets. Messages name the offending file/line where known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A word was queried that the dictionary does not contain.
class UnknownNumeralError : public std::runtime_error {
 public:
  explicit UnknownNumeralError(const std::string& what) : std::runtime_error(what) {}
};

/// Synthetic-language generation rejected its inputs.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace numdec
