#include "fareyaf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return farey::cli::runCli(argc, argv, std::cout, std::cerr); }
