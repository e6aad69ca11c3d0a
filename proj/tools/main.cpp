#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ore::cli::cli_main(argc, argv, std::cout, std::cerr); }
