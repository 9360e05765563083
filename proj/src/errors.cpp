#include "waves/errors.hpp"

namespace waves {

std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::OutOfBranch: return "out-of-branch";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::Resonance: return "resonance";
    case ErrorKind::Criticality: return "criticality";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::NoSignChange: return "no-sign-change";
    case ErrorKind::NonUnique: return "non-unique";
    case ErrorKind::Resolution: return "resolution";
    case ErrorKind::Inconclusive: return "inconclusive";
    case ErrorKind::Request: return "request";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace waves
