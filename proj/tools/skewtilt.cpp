#include "skewtilt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return skewtilt::run_cli(argc, argv, std::cout, std::cerr); }
