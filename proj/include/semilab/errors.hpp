//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_ERRORS_HPP_
#define SEMILAB_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "subset.hpp"  // for elem_t

namespace semilab {

  //! Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Tables that are ragged, have the wrong size or out-of-range entries.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  //! A single failed axiom instance: the law and the elements witnessing it.
  struct Violation {
    std::string         law;
    std::vector<elem_t> witness;

    std::string to_string() const;
  };

  class AxiomViolation : public Error {
   public:
    explicit AxiomViolation(std::vector<Violation> v);

    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

   private:
    std::vector<Violation> _violations;
  };

  class InvalidParameters : public Error {
   public:
    using Error::Error;
  };

  class IncompatiblePartition : public Error {
   public:
    using Error::Error;
  };

  class NotLinear : public Error {
   public:
    using Error::Error;
  };

  class NotComposable : public Error {
   public:
    using Error::Error;
  };

  class NotDistributive : public Error {
   public:
    NotDistributive(elem_t a, elem_t b, elem_t c);
    std::vector<elem_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::vector<elem_t> _witness;
  };

  //! Thrown when a lemma-based cross-check disagrees with a direct
  //! computation.  This always indicates a bug in the engine.
  class CrosscheckFailure : public Error {
   public:
    using Error::Error;
  };

  class HypothesisUnmet : public Error {
   public:
    using Error::Error;
  };

  //! Raised only by operations that cannot return a partial result.
  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

  //! An input file that cannot be opened or read.
  class FileError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace semilab

#endif  // SEMILAB_ERRORS_HPP_
