#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace semiring_lab {

// Base class for every error raised by the library. Anything that is not a
// bug in the caller's data (I/O, JSON shape, ...) is reported by the CLI
// layer instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tables: wrong dimensions, entries out of range.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Unreadable files or JSON that does not match the documented formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A structural law failed. Carries the law's name and a witness tuple of
// element indices (empty when the law is nullary).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<int> witness)
      : Error("axiom violation: " + axiom), axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<int> witness_;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

// Operation applied to the wrong kind of structure or congruence.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class CongruenceLimitExceeded : public Error {
 public:
  explicit CongruenceLimitExceeded(long cap)
      : Error("congruence enumeration exceeded cap " + std::to_string(cap)),
        cap_(cap) {}
  long cap() const { return cap_; }

 private:
  long cap_;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotASubsemimodule : public Error {
 public:
  NotASubsemimodule(std::string what, std::vector<int> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class ZeroIdempotent : public Error {
 public:
  using Error::Error;
};

class NotAPoset : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class NotDistributive : public Error {
 public:
  using Error::Error;
};

class NotBooleanBase : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace semiring_lab
