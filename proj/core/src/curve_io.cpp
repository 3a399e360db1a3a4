#include "frechet/curve_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

double parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    fail(line_no, "not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) fail(line_no, "coordinate is not finite");
  return value;
}

}  // namespace

PolyCurve read_curve(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::vector<double> coords;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (line_no == 1 && rest.substr(0, 3) == "\xEF\xBB\xBF") rest.remove_prefix(3);
    if (rest.empty()) continue;
    std::size_t fields = 0;
    while (true) {
      const auto comma = rest.find(',');
      coords.push_back(parse_number(rest.substr(0, comma), line_no));
      ++fields;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (dim == 0) {
      dim = fields;
    } else if (fields != dim) {
      fail(line_no, "expected " + std::to_string(dim) + " coordinates, got " +
                        std::to_string(fields));
    }
  }
  if (dim == 0) throw FormatError("curve file contains no vertices");
  return PolyCurve(dim, std::move(coords));
}

PolyCurve read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return read_curve(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

PolyCurve parse_curve(const std::string& text) {
  std::istringstream in(text);
  return read_curve(in);
}

void write_curve(std::ostream& out, const PolyCurve& curve) {
  char buf[32];
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const PointView v = curve.vertex(i);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k > 0) out << ',';
      const auto res = std::to_chars(buf, buf + sizeof buf, v[k]);
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

void write_curve_file(const std::filesystem::path& path, const PolyCurve& curve) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  write_curve(out, curve);
}

}  // namespace frechet
