#pragma once

#include <stdexcept>
#include <string>

namespace s5kit {

enum class ErrorCode {
  NotSurjective,
  OutOfRange,
  SortMismatch,
  CapExceeded,
  NotParallel,
  SourceMismatch,
  NotOnto,
  NotIntoOneClass,
  NotS5,
  NotEquivalence,
  NotHomomorphism,
  NoAtomCover,
  AtomClash,
  DegreeMismatch,
  NotFaithful,
  NotEquivariant,
  WitnessConflict,
  LevelMismatch,
  NotAModel,
  NonIntegralOrbit,
  ClusterExceedsTruncation,
  BadInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace s5kit
