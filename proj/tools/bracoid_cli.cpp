#include <iostream>

#include "bracoid/cli.hpp"

int main(int argc, char** argv) { return bracoid::cli::run(argc, argv, std::cout, std::cerr); }
