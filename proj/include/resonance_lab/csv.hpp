#pragma once
#include <cmath>
#include <cstdio>
#include <string>

namespace rlab {

// Floating-point cell formatting for the data files: 17 significant digits
// (enough to round-trip a double exactly), "inf"/"-inf" for infinities.
inline std::string csv_float(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string csv_int(long v) { return std::to_string(v); }

}  // namespace rlab
