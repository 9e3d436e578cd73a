#include <iostream>

#include "ellgauss/cli.hpp"

int main(int argc, char** argv) { return ellgauss::run_cli(argc, argv, std::cout, std::cerr); }
