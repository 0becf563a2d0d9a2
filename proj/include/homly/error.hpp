#pragma once

#include <stdexcept>
#include <string>

namespace homly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad rational text or a zero denominator.
class MalformedScalar : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The suite needs a table the algebra does not carry.
class SuiteInapplicable : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

/// A construction's input failed one of its verified hypotheses.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class TooManyCandidates : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra, map or candidate document. The message names the
/// offending JSON path.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace homly
