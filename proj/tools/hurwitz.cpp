#include <iostream>

#include "dhur/cli.hpp"

int main(int argc, char** argv) { return dhur::run_cli(argc, argv, std::cout, std::cerr); }
