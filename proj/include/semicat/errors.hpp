#ifndef SEMICAT_ERRORS_HPP_
#define SEMICAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semicat {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(std::string const& what) : std::runtime_error(what) {}
};

// Multiplication table errors.
struct NonAssociativeError : Error {
  int a, b, c;
  NonAssociativeError(int a_, int b_, int c_)
      : Error("non-associative triple (" + std::to_string(a_) + ", "
              + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct OutOfRangeError : Error {
  int row, col;
  OutOfRangeError(int row_, int col_)
      : Error("table entry out of range at row " + std::to_string(row_)
              + ", col " + std::to_string(col_)),
        row(row_), col(col_) {}
};

struct NotIdempotentError : Error {
  int e;
  explicit NotIdempotentError(int e_)
      : Error("element " + std::to_string(e_) + " is not an idempotent"),
        e(e_) {}
};

// Enumeration and search guards.
struct SizeGuardError : Error {
  long long bound, actual;
  SizeGuardError(long long bound_, long long actual_)
      : Error("size guard exceeded: " + std::to_string(actual_) + " > "
              + std::to_string(bound_)),
        bound(bound_), actual(actual_) {}
};

// Precondition failures.
struct NotRegularError : Error {
  NotRegularError() : Error("semigroup is not regular") {}
};

struct NotInverseError : Error {
  NotInverseError() : Error("semigroup is not inverse") {}
};

struct NotLocallyInverseError : Error {
  NotLocallyInverseError() : Error("semigroup is not locally inverse") {}
};

struct NotInversiveCategoryError : Error {
  explicit NotInversiveCategoryError(std::string const& why)
      : Error("category is not inversive: " + why) {}
};

// Category-level errors.
struct NotInHomSetError : Error {
  int e, u, f;
  NotInHomSetError(int e_, int u_, int f_)
      : Error("element " + std::to_string(u_) + " does not lie in "
              + std::to_string(e_) + "S" + std::to_string(f_)),
        e(e_), u(u_), f(f_) {}
};

struct NoFactorisationError : Error {
  int morphism;
  explicit NoFactorisationError(int m)
      : Error("morphism " + std::to_string(m) + " admits no normal factorisation"),
        morphism(m) {}
};

struct NotEpimorphismError : Error {
  int morphism;
  explicit NotEpimorphismError(int m)
      : Error("morphism " + std::to_string(m) + " is not an epimorphism"),
        morphism(m) {}
};

struct DomainMismatchError : Error {
  explicit DomainMismatchError(std::string const& what) : Error(what) {}
};

struct AxiomViolationError : Error {
  explicit AxiomViolationError(std::string const& what) : Error(what) {}
};

// Cross-connection errors.  These signal violated invariants, not bad input.
struct EtaNotWellDefinedError : Error {
  explicit EtaNotWellDefinedError(std::string const& what) : Error(what) {}
};

struct NoTransposeError : Error {
  explicit NoTransposeError(std::string const& what) : Error(what) {}
};

struct MultipleTransposesError : Error {
  explicit MultipleTransposesError(std::string const& what) : Error(what) {}
};

struct NotClosedError : Error {
  explicit NotClosedError(std::string const& what) : Error(what) {}
};

// Cross-validation of equivalent theorem conditions failed; always a bug.
struct InternalDisagreementError : Error {
  explicit InternalDisagreementError(std::string const& what)
      : Error("internal disagreement: " + what) {}
};

// Rees matrix errors.
struct IrregularMatrixError : Error {
  bool is_row;
  int index;
  IrregularMatrixError(bool is_row_, int index_)
      : Error(std::string("sandwich matrix has an all-zero ")
              + (is_row_ ? "row " : "column ") + std::to_string(index_)),
        is_row(is_row_), index(index_) {}
};

// Input format errors.
struct ParseError : Error {
  explicit ParseError(std::string const& what) : Error(what) {}
};

}  // namespace semicat

#endif  // SEMICAT_ERRORS_HPP_
