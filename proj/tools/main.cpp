#include "dgakit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dgakit::run_cli(argc, argv, std::cout, std::cerr); }
