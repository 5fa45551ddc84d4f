#include <iostream>

#include "runcube/cli.hpp"

int main(int argc, char** argv) { return runcube::cli::run(argc, argv, std::cout, std::cerr); }
