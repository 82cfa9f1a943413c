#include <iostream>

#include "bk/cli.hpp"

int main(int argc, char** argv) { return bk::run_cli(argc, argv, std::cout, std::cerr); }
