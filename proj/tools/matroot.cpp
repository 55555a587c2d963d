#include <iostream>

#include "matroot/cli/commands.hpp"

int main(int argc, char** argv) { return matroot::cli::run_cli(argc, argv, std::cout, std::cerr); }
