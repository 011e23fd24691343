#include <iostream>

#include "corona/cli.hpp"

int main(int argc, char** argv) { return corona::cli::run(argc, argv, std::cout, std::cerr); }
