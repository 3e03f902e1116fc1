#include <iostream>

#include "rhaudit/cli.hpp"

int main(int argc, char** argv) { return rhaudit::cli::main(argc, argv, std::cout, std::cerr); }
