#include "hlz/error.hpp"

namespace hlz {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::DegreeOverflow: return "degree-overflow";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::WrongKernel: return "wrong-kernel";
    case ErrorKind::NonConvergent: return "non-convergent";
    case ErrorKind::Conditioning: return "conditioning";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace hlz
