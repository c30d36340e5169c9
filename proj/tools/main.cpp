#include <iostream>

#include "logenergy/cli.hpp"

int main(int argc, char** argv) { return logenergy::cli::run(argc, argv, std::cout, std::cerr); }
