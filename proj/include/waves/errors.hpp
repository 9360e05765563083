#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waves {

enum class ErrorKind {
  Domain,          // argument outside an operation's precondition
  OutOfBranch,     // d <= d_c: no subcritical laminar flow
  Degenerate,      // kappa == 0, surface stagnation
  IllConditioned,  // inside the guard band around d_s for a > 0
  Resonance,       // sigma(k tau*) == 0 for a higher harmonic
  Criticality,     // sigma(0) == 0
  Consistency,     // tau* is not a dispersion root
  NoSignChange,    // bracketing failed
  NonUnique,       // more than one sign change where one was expected
  Resolution,      // discretisation failed
  Inconclusive,    // oracle could not reach a verdict
  Request,         // malformed request (e.g. too many eigenvalues)
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class WavesError : public std::runtime_error {
 public:
  WavesError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw WavesError(kind, what);
}

}  // namespace waves
