#include "multspace/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return multspace::cli::run(argc, argv, std::cout, std::cerr); }
