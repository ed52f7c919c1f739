#include <iostream>

#include "liftspace/cli/commands.hpp"

int main(int argc, char** argv) { return liftspace::cli::run(argc, argv, std::cout, std::cerr); }
