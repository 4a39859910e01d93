#include <iostream>

#include "turnover/cli.hpp"

int main(int argc, char** argv) { return turnover::run_cli(argc, argv, std::cout, std::cerr); }
