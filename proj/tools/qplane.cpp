#include "uqsl2/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return uqsl2::run_cli(argc, argv, std::cout, std::cerr); }
