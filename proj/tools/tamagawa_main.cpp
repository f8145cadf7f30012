#include <iostream>

#include "tamagawa/cli.hpp"

int main(int argc, char** argv) { return tamagawa::run_cli(argc, argv, std::cout, std::cerr); }
