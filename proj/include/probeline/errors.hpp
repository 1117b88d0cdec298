#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace probeline {

// Base class for typed failures. kind() is a stable machine-readable tag,
// used by the CLI for structured JSON error objects and exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PROBELINE_DEFINE_ERROR(NAME)                                 \
  class NAME : public Error {                                        \
   public:                                                           \
    explicit NAME(const std::string& msg) : Error(#NAME, msg) {}     \
  }

// Validation failures (CLI exit code 2).
PROBELINE_DEFINE_ERROR(InvalidModel);
PROBELINE_DEFINE_ERROR(ConfigError);

// Compute failures (CLI exit code 3).
PROBELINE_DEFINE_ERROR(AmbiguousRegime);
PROBELINE_DEFINE_ERROR(DegenerateRoots);
PROBELINE_DEFINE_ERROR(StepTooLarge);
PROBELINE_DEFINE_ERROR(NoRealBand);
PROBELINE_DEFINE_ERROR(OutsideValidity);
PROBELINE_DEFINE_ERROR(NoInteriorExtremum);
PROBELINE_DEFINE_ERROR(NegativeEffectiveWidth);
PROBELINE_DEFINE_ERROR(GridNotSymmetric);
PROBELINE_DEFINE_ERROR(SingularSystem);
PROBELINE_DEFINE_ERROR(NoConvergence);
PROBELINE_DEFINE_ERROR(NoHalfHeightPoint);

#undef PROBELINE_DEFINE_ERROR

}  // namespace probeline
