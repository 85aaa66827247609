#include <iostream>

#include "siegel2/cli.hpp"

int main(int argc, char** argv) { return siegel2::cli::run(argc, argv, std::cout, std::cerr); }
