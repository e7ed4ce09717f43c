#pragma once

#include <string>

namespace hexcpg {

/// Shortest decimal string that round-trips the double exactly
/// (std::to_chars). Deterministic across runs and builds.
std::string fmt_double(double v);

/// Fixed-point formatting for SVG coordinates.
std::string fmt_fixed(double v, int precision);

/// RFC-4180 field quoting: quotes the field iff it contains a comma,
/// a double quote, or a line break.
std::string csv_field(const std::string& s);

}  // namespace hexcpg
