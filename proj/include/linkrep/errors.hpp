#pragma once

#include <stdexcept>
#include <string>

namespace linkrep {

// Structured error conditions caused by bad input. The CLI maps these to
// exit code 2.
enum class Err {
  MalformedPd,
  InvalidEdgeMultiplicity,
  BrokenComponentChain,
  SameComponent,
  SingleComponent,
  UTooSmall,
  NotAForest,
  UnknownName,
  NotOddPrime,
  BasepointNotI,
  InvalidColoring,
  NoSamplesForFreeDirection,
  BadArgument,
};

struct InputError : std::runtime_error {
  Err code;
  InputError(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Violations of internal invariants (must not occur on valid inputs).
// The CLI maps these to exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

const char* err_name(Err c);

}  // namespace linkrep
