#include "cwidth/common.hpp"

#include <cstdio>

namespace cwidth {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InvalidBody: return "invalid-body";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::ConstructionError: return "construction-error";
  }
  return "unknown";
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

std::string fmt10(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace cwidth
