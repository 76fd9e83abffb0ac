#include <iostream>

#include "pfdisp/cli.hpp"

int main(int argc, char** argv) { return pfdisp::cli::run(argc, argv, std::cout, std::cerr); }
