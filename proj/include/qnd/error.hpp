#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnd {

  using elem = std::size_t;

  // Every failure raised by the library derives from this, so the CLI can map
  // any of them onto exit code 2 with a single handler.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class Axiom { A1, A2, A3 };

  class AxiomViolation : public Error {
   public:
    AxiomViolation(Axiom axiom, elem i, elem j, elem k, std::string const& what)
        : Error(what), axiom(axiom), i(i), j(j), k(k) {}
    Axiom axiom;
    // Witness triple. For A1 only i is meaningful; for A2, rows i and j
    // collide in column k; for A3 the failing (i, j, k).
    elem i, j, k;
  };

  class NotAHomomorphism : public Error {
   public:
    NotAHomomorphism(elem i, elem j, std::string const& what)
        : Error(what), i(i), j(j) {}
    elem i, j;
  };

#define QND_DEFINE_ERROR(Name)   \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  };

  QND_DEFINE_ERROR(ShapeError)
  QND_DEFINE_ERROR(DomainMismatch)
  QND_DEFINE_ERROR(CodomainMismatch)
  QND_DEFINE_ERROR(BaseMismatch)
  QND_DEFINE_ERROR(NotSurjective)
  QND_DEFINE_ERROR(GroupTooLarge)
  QND_DEFINE_ERROR(WordInconsistency)
  QND_DEFINE_ERROR(NotASubgroup)
  QND_DEFINE_ERROR(NotASubgroupOfInn)
  QND_DEFINE_ERROR(NotACongruence)
  QND_DEFINE_ERROR(SquareNotCommuting)
  QND_DEFINE_ERROR(PreconditionViolated)
  QND_DEFINE_ERROR(ClassViolation)
  QND_DEFINE_ERROR(NoFill)
  QND_DEFINE_ERROR(PhiNotTrivialDomain)
  QND_DEFINE_ERROR(PhiNotSurjective)
  QND_DEFINE_ERROR(OrderTooLarge)
  QND_DEFINE_ERROR(UnknownClaim)
  // Raised when two routes that must agree by theorem disagree.
  QND_DEFINE_ERROR(InternalError)

#undef QND_DEFINE_ERROR

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& reason)
        : Error("line " + std::to_string(line) + ": " + reason),
          line(line),
          reason(reason) {}
    std::size_t line;
    std::string reason;
  };

}  // namespace qnd
