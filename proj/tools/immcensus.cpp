#include <iostream>

#include "immcensus/cli.hpp"

int main(int argc, char** argv) { return immcensus::cli::run(argc, argv, std::cout, std::cerr); }
