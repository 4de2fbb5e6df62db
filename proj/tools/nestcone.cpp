#include <iostream>

#include "nestcone/cli.hpp"

int main(int argc, char** argv) { return nestcone::run(argc, argv, std::cout, std::cerr); }
