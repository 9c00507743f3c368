#include <iostream>

#include "cliquewalk/cli.hpp"

int main(int argc, char** argv) { return cliquewalk::cli::run(argc, argv, std::cout, std::cerr); }
