#ifndef ASSEMBLIES_ERRORS_HPP_
#define ASSEMBLIES_ERRORS_HPP_

#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace assemblies {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed table: wrong shape, entry out of range, bad or duplicate names.
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  // A table failed validation (not associative, not a group, ...).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // A table is not associative; carries the lexicographically first
  // failing triple (x, y, z) as element indices.
  class AssociativityError : public ValidationError {
   public:
    AssociativityError(std::string const&             what,
                       std::array<std::uint32_t, 3> witness)
        : ValidationError(what), _witness(witness) {}

    std::array<std::uint32_t, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<std::uint32_t, 3> _witness;
  };

  // An operation requiring a validated (associative) table got an
  // unvalidated one, or some other documented precondition failed.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // An exponential construction or search exceeded its configured cap.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t requested, std::size_t cap)
        : Error(what + " (requested " + std::to_string(requested) + ", cap "
                + std::to_string(cap) + ")"),
          _requested(requested),
          _cap(cap) {}

    std::size_t requested() const noexcept {
      return _requested;
    }
    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _requested;
    std::size_t _cap;
  };

  // A computed fact contradicts a proved statement the library relies on.
  // Seeing one of these means either a bug or a counterexample.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace assemblies

#endif  // ASSEMBLIES_ERRORS_HPP_
