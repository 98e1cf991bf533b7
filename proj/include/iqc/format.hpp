#pragma once

#include <cstdio>
#include <string>

#include "iqc/types.hpp"

namespace iqc {

// 17 significant digits round-trips a double exactly; every number we print
// anywhere goes through here so repeated runs are byte identical.
inline std::string fmt17(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt17(const Scalar& z) {
  std::string s = fmt17(z.real());
  if (z.imag() >= 0) s += "+";
  s += fmt17(z.imag());
  s += "i";
  return s;
}

}  // namespace iqc
