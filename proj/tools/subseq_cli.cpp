#include <iostream>

#include "subseq/cli.hpp"

int main(int argc, char** argv) { return subseq::run_cli(argc, argv, std::cout, std::cerr); }
