#include <iostream>

#include "cliquedec/cli.hpp"

int main(int argc, char** argv) {
  return cliquedec::cli::dispatch(argc, argv, {std::cout, std::cerr});
}
