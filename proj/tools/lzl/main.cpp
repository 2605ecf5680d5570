#include <iostream>

#include "lzl/commands.hpp"

int main(int argc, char** argv) { return lzl::cli::run(argc, argv, std::cout, std::cerr); }
