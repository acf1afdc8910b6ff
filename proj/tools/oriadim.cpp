#include <iostream>

#include "oriadim/cli.hpp"

int main(int argc, char** argv) { return oriadim::cli_main(argc, argv, std::cout, std::cerr); }
