#include <iostream>

#include "jtp/cli.hpp"

int main(int argc, char** argv) { return jtp::cli::run(argc, argv, std::cout, std::cerr); }
