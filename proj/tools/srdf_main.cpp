#include "srdf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return srdf::run_cli(argc, argv, std::cout, std::cerr); }
