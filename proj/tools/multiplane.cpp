#include <iostream>

#include "multiplane/cli.hpp"

int main(int argc, char** argv) { return multiplane::cli::run(argc, argv, std::cout, std::cerr); }
