#include <iostream>

#include "awn/cli.hpp"

int main(int argc, char** argv) { return awn::cli::run(argc, argv, std::cout, std::cerr); }
