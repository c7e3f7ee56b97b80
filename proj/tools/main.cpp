#include <iostream>

#include "ycoupler/cli.hpp"

int main(int argc, char** argv) { return ycoupler::cli::run(argc, argv, std::cout, std::cerr); }
