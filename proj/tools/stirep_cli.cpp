#include <iostream>

#include "stirep/cli.hpp"

int main(int argc, char** argv) { return stirep::cli::main_entry(argc, argv, std::cout, std::cerr); }
