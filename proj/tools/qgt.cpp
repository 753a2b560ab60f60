#include <iostream>

#include "qgt/cli.hpp"

int main(int argc, char** argv) { return qgt::run_cli(argc, argv, std::cout, std::cerr); }
