#include "hypcert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hypcert::run_cli(argc, argv, std::cout, std::cerr); }
