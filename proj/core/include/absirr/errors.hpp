#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace absirr {

// Bad input: a precondition of a public operation does not hold.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : DomainError("parse error at position " + std::to_string(position) +
                    ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ZeroPolynomialError : public DomainError {
 public:
  ZeroPolynomialError() : DomainError("operation undefined for the zero polynomial") {}
  explicit ZeroPolynomialError(const std::string& what) : DomainError(what) {}
};

class ModulusMismatchError : public DomainError {
 public:
  ModulusMismatchError() : DomainError("operands live over different prime fields") {}
};

class RankDeficientError : public DomainError {
 public:
  RankDeficientError(std::size_t rank, std::size_t wanted)
      : DomainError("matrix has rank " + std::to_string(rank) + ", need " +
                    std::to_string(wanted)),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

// An internal consistency check failed. Reaching this is a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace absirr
