#include <iostream>

#include "fchd/cli.hpp"

int main(int argc, char** argv) { return fchd::cli::run(argc, argv, std::cout, std::cerr); }
