#ifndef KAPPA_ERROR_HPP_
#define KAPPA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kappa {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input text (semigroup files, terms, system files).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! Input parses but violates an algebraic requirement, e.g. a
  //! non-associative table or an unknown symbol.
  class AlgebraError : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called outside its domain, e.g. k <= |S|.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A configured size cap was exceeded.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

}  // namespace kappa

#endif  // KAPPA_ERROR_HPP_
