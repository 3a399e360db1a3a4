#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "common.hpp"

int main(int argc, char** argv) {
  using namespace frechet::cli;
  CLI::App app{"Frechet distance tools: exact references, 1D distance oracle, (3+eps) "
               "approximation, OV hard instances and benchmarks."};
  app.require_subcommand(1);
  Action action;
  add_dist_command(app, action);
  add_oracle_command(app, action);
  add_hard_command(app, action);
  add_bench_command(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInput;
}
