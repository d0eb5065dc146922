#include <iostream>

#include "autodime/harness/cli.h"

int main(int argc, char** argv) {
  return autodime::harness::RunCli(argc, argv, std::cout, std::cerr);
}
