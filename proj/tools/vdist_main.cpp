#include <iostream>

#include "vdist/cli.hpp"

int main(int argc, char** argv) { return vdist::cli::run(argc, argv, std::cout, std::cerr); }
