#include <iostream>

#include <partrec/cli.hpp>

int main(int argc, char** argv) {
  return partrec::cli::run(argc, argv, std::cout, std::cerr);
}
