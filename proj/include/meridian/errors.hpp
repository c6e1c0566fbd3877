// meridian - error codes and exception type shared by all modules
#pragma once

#include <stdexcept>
#include <string>

namespace meridian {

enum class Err {
  NonPositiveRadius,
  DegenerateCurve,
  OutOfDomain,
  StepTooLarge,
  ZeroArgument,
  AtZeroOfPrime,
  CoincidentPoints,
  OutOfWindow,
  NonPositiveProfile,
  DivergentArea,
  NonHolomorphic,
  DivergentConvolution,
  BaseAtSingularPoint,
  AccuracyDegraded,
  UnsupportedShear,
  InvalidSpec,
  ParseError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace meridian
