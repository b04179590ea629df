#include <wehrl/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return wehrl::cli::run_cli(argc, argv, std::cout, std::cerr); }
