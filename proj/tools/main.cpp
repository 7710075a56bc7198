#include "dyck/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dyck::cli::run(argc, argv, std::cout, std::cerr); }
