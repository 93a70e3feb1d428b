#include <iostream>

#include "fusionkit/cli.hpp"

int main(int argc, char** argv) { return fusionkit::cli::run(argc, argv, std::cout, std::cerr); }
