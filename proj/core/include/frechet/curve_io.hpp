#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "frechet/geometry.hpp"

namespace frechet {

// Text format: one vertex per line, coordinates separated by commas, no
// header. The first non-blank line fixes the dimension; blank lines are
// skipped. Throws FormatError with the offending line number.
PolyCurve read_curve(std::istream& in);
PolyCurve read_curve_file(const std::filesystem::path& path);
PolyCurve parse_curve(const std::string& text);

// Writes shortest round-trip representations, so read(write(P)) == P.
void write_curve(std::ostream& out, const PolyCurve& curve);
void write_curve_file(const std::filesystem::path& path, const PolyCurve& curve);

}  // namespace frechet
