#pragma once

#include <cstdio>
#include <string>

namespace yokegrip {

// Full-precision formatting for CSV output: 17 significant digits round-trip
// through strtod bit-exactly. Locale-independent ('.' decimal point assumed;
// the toolkit never calls setlocale).
inline std::string fmt_full(double v) {
  if (v == 0.0) v = 0.0;  // fold negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Human-readable reports use 6 significant digits.
inline std::string fmt_sig6(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace yokegrip
