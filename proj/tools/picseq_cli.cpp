#include <iostream>

#include "picseq/cli/run.hpp"

int main(int argc, char** argv) { return picseq::cli::run_cli(argc, argv, std::cout, std::cerr); }
