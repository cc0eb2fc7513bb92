#include <iostream>

#include "cjcalc/cli.hpp"

int main(int argc, char** argv) { return cjcalc::run_cli(argc, argv, std::cout, std::cerr); }
