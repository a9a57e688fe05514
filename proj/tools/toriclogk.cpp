#include <iostream>

#include "toriclogk/cli.hpp"

int main(int argc, char** argv) { return toriclogk::cli::main(argc, argv, std::cout, std::cerr); }
