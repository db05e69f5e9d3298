#include <iostream>

#include "rflab/cli.hpp"

int main(int argc, char** argv) { return rflab::cli::run(argc, argv, std::cout, std::cerr); }
