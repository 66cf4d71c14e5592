// numfmt.hpp — deterministic number formatting for reports and CSV emission.

#pragma once

#include <cstdio>
#include <string>

namespace trinelab {

/// 17 significant digits, shortest form ('%.17g'); lossless for doubles.
inline std::string fmt_sig17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Scientific notation with 17 significant digits ('%.16e').
inline std::string fmt_sci17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

}  // namespace trinelab
