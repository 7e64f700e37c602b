#include <iostream>

#include "tegraph/cli.hpp"

int main(int argc, char** argv) { return tegraph::cli::run(argc, argv, std::cout, std::cerr); }
