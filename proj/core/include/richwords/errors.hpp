#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace richwords {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alphabet size out of [2, 36] or a letter outside the alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Malformed word text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds the size an O(n^3) oracle is willing to handle.
class InputTooLargeError : public Error {
 public:
  using Error::Error;
};

class EmptyWordError : public Error {
 public:
  using Error::Error;
};

/// undo() on an eertree with an empty journal.
class UnderflowError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the hypothesis of an inequality or formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A count table does not reach the lengths a computation needs.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// A growth hypothesis R_m <= K h^m fails on the table it is applied to.
class InvalidHypothesisError : public Error {
 public:
  using Error::Error;
};

/// UPS-factorization requested for a word that is not rich.
class NotRichError : public Error {
 public:
  explicit NotRichError(std::int64_t defect)
      : Error("word is not rich (palindromic defect " + std::to_string(defect) + ")"),
        defect_(defect) {}

  std::int64_t defect() const noexcept { return defect_; }

 private:
  std::int64_t defect_;
};

}  // namespace richwords
