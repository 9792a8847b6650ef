#ifndef DYNNIKOV_ERRORS_HPP
#define DYNNIKOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynnikov {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input with the wrong shape: bad lengths, unparsable text, parity errors.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A coordinate vector that is not the image of any multicurve.
class InvalidCoordinates : public Error {
 public:
  using Error::Error;
};

/// A pair (i, j) that does not name an elementary multicurve.
class InvalidElementary : public Error {
 public:
  using Error::Error;
};

/// A braid letter outside 1..n-1.
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

/// Operands built for different puncture counts.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class NotRelaxed : public Error {
 public:
  using Error::Error;
};

class NotDisjoint : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant, e.g. the relaxation loop exceeding its budget.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dynnikov

#endif  // DYNNIKOV_ERRORS_HPP
