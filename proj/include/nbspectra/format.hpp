#pragma once

#include <complex>
#include <string>

namespace nbspectra {

// Fixed 12-significant-digit decimal rendering used by every serialized
// number, so repeated runs produce byte-identical files.
std::string format_double(double x, int significant_digits = 12);

// "re" or "re+imi"/"re-imi" with the same digit policy.
std::string format_complex(const std::complex<double>& z, int significant_digits = 12);

// Minimal JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

}  // namespace nbspectra
