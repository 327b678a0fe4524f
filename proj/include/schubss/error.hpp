#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schubss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown type letter, rank outside the type's range, index out of range.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The requested enumeration exceeds the configured limit.
class EnumerationLimitError : public Error {
 public:
  EnumerationLimitError(std::uint64_t required, std::uint64_t limit);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// Violated input condition of the semistability criterion.
class PreconditionError : public Error {
 public:
  enum class Reason { non_dominant, not_in_root_lattice, not_min_coset_rep, zero_weight, rank_mismatch };

  PreconditionError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Two independent computations disagreed; indicates an engine bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace schubss
