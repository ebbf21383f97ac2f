#include <iostream>
#include <string>
#include <vector>

#include "triso/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return triso::cli::run(args, std::cout, std::cerr);
}
