#include <iostream>
#include <vector>

#include <p6c4/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return p6c4::cli_main(std::move(args), std::cin, std::cout, std::cerr);
}
