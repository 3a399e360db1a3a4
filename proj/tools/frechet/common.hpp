#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace CLI {
class App;
}

namespace frechet::cli {

using Json = nlohmann::ordered_json;

// A subcommand stores its action here once its options are parsed.
using Action = std::function<int()>;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCertification = 3;

void add_dist_command(CLI::App& app, Action& action);
void add_oracle_command(CLI::App& app, Action& action);
void add_hard_command(CLI::App& app, Action& action);
void add_bench_command(CLI::App& app, Action& action);

// FRECHET_SEED, when set, overrides the command-line seed.
std::uint64_t resolve_seed(std::uint64_t cli_seed);

// Generator for one benchmark cell; distinct per (seed, tag, n, m, trial).
std::mt19937_64 cell_rng(std::uint64_t seed, const std::string& tag, std::size_t n,
                         std::size_t m, std::size_t trial);

// Comma-separated positive integers; accepts forms such as "1e4".
std::vector<std::size_t> parse_size_grid(const std::string& text);

double median(std::vector<double> values);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void print_report(const Json& report);

}  // namespace frechet::cli
