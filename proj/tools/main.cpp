#include <iostream>

#include "laytrop/cli.hpp"

int main(int argc, char** argv) { return laytrop::cli::run(argc, argv, std::cout, std::cerr); }
