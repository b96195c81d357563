#include <iostream>

#include "bospec/cli.hpp"

int main(int argc, char** argv) { return bospec::cli::run(argc, argv, std::cout, std::cerr); }
