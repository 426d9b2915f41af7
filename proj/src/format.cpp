#include "nbspectra/format.hpp"

#include <cmath>
#include <cstdio>

namespace nbspectra {

std::string format_double(double x, int significant_digits) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x);
  return buf;
}

std::string format_complex(const std::complex<double>& z, int significant_digits) {
  std::string out = format_double(z.real(), significant_digits);
  if (z.imag() != 0.0) {
    if (z.imag() > 0) out += '+';
    out += format_double(z.imag(), significant_digits);
    out += 'i';
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace nbspectra
