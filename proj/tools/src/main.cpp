#include <iostream>

#include "endosign/cli/commands.hpp"

int main(int argc, char** argv) { return endosign::cli::run_cli(argc, argv, std::cout, std::cerr); }
