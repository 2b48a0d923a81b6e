#include <iostream>

#include "tvcat/cli/dispatch.hpp"

int main(int argc, char** argv) { return tvcat::cli::run(argc, argv, std::cout, std::cerr); }
