#include "tropical/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tropical::run_cli(argc, argv, std::cout, std::cerr); }
