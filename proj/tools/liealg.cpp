#include <iostream>

#include "liealg/cli.hpp"

int main(int argc, char** argv) { return liealg::cli::run(argc, argv, std::cout, std::cerr); }
