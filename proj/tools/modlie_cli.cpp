#include <iostream>
#include <string>
#include <vector>

#include "modlie/cli.hpp"

int main(int argc, char** argv) {
  using namespace modlie::cli;
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested& h) {
    std::cout << h.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    const RunResult r = run_command(cfg);
    std::cout << r.output;
    return r.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
