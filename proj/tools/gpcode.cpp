#include <iostream>

#include "gpcode/cli.hpp"

int main(int argc, char** argv) { return gpcode::cli::run(argc, argv, std::cout, std::cerr); }
