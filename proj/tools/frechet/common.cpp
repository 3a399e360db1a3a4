#include "common.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace frechet::cli {

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
  const char* env = std::getenv("FRECHET_SEED");
  if (env == nullptr || *env == '\0') return cli_seed;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("FRECHET_SEED must be a non-negative integer, got '" +
                                std::string(env) + "'");
  }
  return value;
}

std::mt19937_64 cell_rng(std::uint64_t seed, const std::string& tag, std::size_t n,
                         std::size_t m, std::size_t trial) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(n),
                                   static_cast<std::uint32_t>(n >> 32),
                                   static_cast<std::uint32_t>(m),
                                   static_cast<std::uint32_t>(trial)};
  for (char c : tag) words.push_back(static_cast<unsigned char>(c));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::vector<std::size_t> parse_size_grid(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string field = text.substr(pos, comma - pos);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() ||
        !(value >= 1) || value != std::floor(value) || value > 1e15) {
      throw std::invalid_argument("bad size '" + field + "' in grid '" + text + "'");
    }
    out.push_back(static_cast<std::size_t>(value));
    pos = comma + 1;
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  return values.size() % 2 ? values[h] : (values[h - 1] + values[h]) / 2;
}

void print_report(const Json& report) { std::cout << report.dump(2) << '\n'; }

}  // namespace frechet::cli
