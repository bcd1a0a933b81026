#pragma once

// Flag-value parsing for the CLI: complex scalars in the shell-safe
// "a+bi" / "a-bi" form (no spaces), comma-separated lists, and "lo..hi"
// integer ranges.

#include <complex>
#include <string>
#include <vector>

namespace toda {

// Accepts "1.5", "-0.3i", "0+0.3i", "0.25-1e-3i", "i", "-i".
std::complex<double> parse_complex(const std::string& text);

std::vector<std::complex<double>> parse_complex_list(const std::string& text);

// "3" -> {3,3}; "1..4" -> {1,4}
std::pair<int, int> parse_int_range(const std::string& text);

}  // namespace toda
