#include <iostream>

#include "aig/cli.hpp"

int main(int argc, char** argv) { return aig::cli::run(argc, argv, std::cout, std::cerr); }
