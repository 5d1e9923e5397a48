#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

void usage(std::ostream& out) {
  out << "usage: capkit <command> [options] [documents...]\n\ncommands:";
  for (const auto& c : capkit::cli::command_names()) out << ' ' << c;
  out << "\n\nRun `capkit <command> --help` for the options of a command.\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage(std::cerr);
    return capkit::cli::kExitSchema;
  }
  const std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    usage(std::cout);
    return 0;
  }
  const std::vector<std::string> args(argv + 2, argv + argc);
  const auto result = capkit::cli::run(command, args, [] {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  });
  std::cout << result.output;
  std::cerr << result.error;
  if (result.exit_code != 0 && command != "laws" && result.output.empty() && result.error.empty()) usage(std::cerr);
  return result.exit_code;
}
