#include <iostream>

#include "ttone/cli.hpp"

int main(int argc, char** argv) { return ttone::cli::run(argc, argv, std::cout, std::cerr); }
