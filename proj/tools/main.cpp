#include <iostream>

#include "gcfluct/cli.hpp"

int main(int argc, char** argv) { return gcfluct::run_cli(argc, argv, std::cout, std::cerr); }
