#include <iostream>

#include "zsalg/cli.hpp"

int main(int argc, char** argv) { return zsalg::run_cli(argc, argv, std::cout, std::cerr); }
