#include <iostream>

#include "sechh/cli.hpp"

int main(int argc, char** argv) { return sechh::cli::run(argc, argv, std::cout, std::cerr); }
