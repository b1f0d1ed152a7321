#pragma once

#include <stdexcept>
#include <string>

namespace kmnil {

enum class Errc {
  NotGCM,
  NotSymmetrizable,
  DimensionMismatch,
  BoundTooLarge,
  BoundTooSmall,
  MissingComponent,
  EnergyNotPositive,
  PrerequisiteMissing,
  InvariantViolation,
  ComplementLeak,
  InvalidTuple,
  IndexOutOfRange,
  NoDecomposition,
  NonUniqueDecomposition,
  MatrixTooLarge,
  BudgetExceeded,
  OutOfBound,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kmnil
