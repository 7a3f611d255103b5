#include <iostream>

#include "mdc/cli.hpp"

int main(int argc, char** argv) { return mdc::run_cli(argc, argv, std::cout, std::cerr); }
