#include <iostream>

#include "vantage/cli.hpp"

int main(int argc, char** argv) { return vantage::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
