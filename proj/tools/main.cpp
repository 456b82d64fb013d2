#include <iostream>

#include "unbordered/cli.hpp"

int main(int argc, char** argv) { return unbordered::run(argc, argv, std::cout, std::cerr); }
