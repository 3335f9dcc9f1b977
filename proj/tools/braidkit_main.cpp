#include <iostream>

#include "braidkit/cli.hpp"

int main(int argc, char** argv) { return braidkit::cli::main_entry(argc, argv, std::cout, std::cerr); }
