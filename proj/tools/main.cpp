#include <iostream>

#include "rdr/cli.hpp"

int main(int argc, char** argv) { return rdr::run_cli(argc, argv, std::cout, std::cerr); }
