#include "rflab/core.hpp"

namespace rflab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::singular: return "singular";
    case ErrorKind::index: return "index";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::evanescent: return "evanescent";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

}  // namespace rflab
