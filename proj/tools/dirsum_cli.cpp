#include <iostream>

#include "dirsum/cli.hpp"

int main(int argc, char** argv) { return dirsum::cli::main(argc, argv, std::cout, std::cerr); }
